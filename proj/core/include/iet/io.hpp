#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "iet/flows.hpp"
#include "iet/growth.hpp"
#include "iet/interval_exchange.hpp"
#include "iet/interval_set.hpp"
#include "iet/step_function.hpp"

namespace iet {

/// Result of reading an interval-exchange file. Non-canonical but valid
/// descriptions are accepted and canonicalized; each normalization step is
/// reported on the warning channel.
struct ParsedIet {
    IntervalExchange map;
    std::vector<std::string> warnings;
};

// Text formats are line-oriented, version-tagged, and use the scalar
// grammar for every number:
//
//   iet v1            stepfn v1          flow v1
//   field Q           field Q            field Qsqrt 2
//   n 4               m 2                len 1/2 1/2
//   perm 3 2 1 4      breaks 0 1/2 1     rates 1 0+1*sqrt(2)
//   len 1/4 ...       vals 1 0           conjugator h.iet
//
// The field line is `Q` or `Qsqrt <d>`; scalars must live in the declared
// field. The conjugator line is optional and names an iet file relative to
// `base_dir`. Parsers throw ParseError naming the offending input.

ParsedIet parse_iet(std::istream& in, const std::string& source_name);
ParsedIet parse_iet_file(const std::string& path);
void write_iet(std::ostream& out, const IntervalExchange& f);
void write_iet_file(const std::string& path, const IntervalExchange& f);

StepFunction parse_stepfn(std::istream& in, const std::string& source_name);
StepFunction parse_stepfn_file(const std::string& path);
void write_stepfn(std::ostream& out, const StepFunction& phi);

FlowSpec parse_flow(std::istream& in, const std::string& source_name, const std::string& base_dir);
FlowSpec parse_flow_file(const std::string& path);

/// `[a,b) [c,d) ...` with scalar-grammar endpoints; `{}` for the empty set.
std::string format_interval_set(const IntervalSet& s);

/// One graph segment per canonical interval: y = x + omega_j on
/// [beta_{j-1}, beta_j), reported by its left endpoint's ordinate.
struct PlotSegment {
    Scalar x_left;
    Scalar x_right;
    Scalar y_left;
};

std::vector<PlotSegment> plot_segments(const IntervalExchange& f);

/// TSV with a header row, LF endings, exact scalar text plus 30-digit
/// decimal companion columns.
void write_plot_tsv(std::ostream& out, const IntervalExchange& f);
void write_growth_tsv(std::ostream& out, const GrowthReport& report);

} // namespace iet
