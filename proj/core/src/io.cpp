#include "iet/io.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "iet/errors.hpp"

namespace iet {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

struct LineReader {
    std::istream& in;
    std::string source;
    int lineno = 0;

    std::vector<std::string> next(const std::string& keyword) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::vector<std::string> toks = split_tokens(line);
            if (toks.empty()) continue;
            if (toks.front() != keyword)
                fail("expected '" + keyword + "' line, found '" + toks.front() + "'");
            return toks;
        }
        fail("missing '" + keyword + "' line");
    }

    bool peek_keyword(const std::string& keyword, std::vector<std::string>& toks) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            toks = split_tokens(line);
            if (toks.empty()) continue;
            if (toks.front() != keyword) fail("unexpected line '" + toks.front() + "'");
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(source + ":" + std::to_string(lineno) + ": " + what);
    }
};

struct Field {
    long radicand = 0; // 0 means plain Q

    void admit(const Scalar& x, LineReader& r) const {
        if (x.radicand() == 0 || x.radicand() == radicand) return;
        r.fail("scalar " + format_scalar(x) + " does not live in the declared field");
    }
};

Field parse_field_line(LineReader& r) {
    std::vector<std::string> toks = r.next("field");
    if (toks.size() == 2 && toks[1] == "Q") return {};
    if (toks.size() == 3 && toks[1] == "Qsqrt") {
        long d = 0;
        try {
            d = std::stol(toks[2]);
        } catch (const std::exception&) {
            r.fail("bad radicand '" + toks[2] + "'");
        }
        if (!valid_radicand(d)) r.fail("radicand '" + toks[2] + "' is not squarefree or >= 2");
        return {d};
    }
    r.fail("field must be 'Q' or 'Qsqrt <d>'");
}

void write_field_line(std::ostream& out, const std::vector<Scalar>& scalars) {
    long d = 0;
    for (const Scalar& s : scalars) {
        if (s.radicand() != 0) d = s.radicand();
    }
    if (d == 0)
        out << "field Q\n";
    else
        out << "field Qsqrt " << d << "\n";
}

Scalar parse_scalar_checked(const std::string& tok, const Field& field, LineReader& r) {
    try {
        Scalar s = parse_scalar(tok);
        field.admit(s, r);
        return s;
    } catch (const ParseError& e) {
        r.fail(e.what());
    }
}

int parse_int(const std::string& tok, LineReader& r) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        r.fail("bad integer '" + tok + "'");
    }
}

std::vector<Scalar> parse_scalars(const std::vector<std::string>& toks, const Field& field,
                                  LineReader& r) {
    std::vector<Scalar> out;
    for (size_t i = 1; i < toks.size(); ++i) out.push_back(parse_scalar_checked(toks[i], field, r));
    return out;
}

} // namespace

ParsedIet parse_iet(std::istream& in, const std::string& source_name) {
    LineReader r{in, source_name};
    std::vector<std::string> head = r.next("iet");
    if (head.size() != 2 || head[1] != "v1") r.fail("unsupported iet version");
    Field field = parse_field_line(r);

    std::vector<std::string> ntoks = r.next("n");
    if (ntoks.size() != 2) r.fail("n line needs one integer");
    const int n = parse_int(ntoks[1], r);
    if (n < 1) r.fail("n must be >= 1");

    std::vector<std::string> ptoks = r.next("perm");
    if (static_cast<int>(ptoks.size()) != n + 1) r.fail("perm line needs n entries");
    std::vector<int> images;
    for (int i = 1; i <= n; ++i) images.push_back(parse_int(ptoks[static_cast<size_t>(i)], r));

    std::vector<std::string> ltoks = r.next("len");
    if (static_cast<int>(ltoks.size()) != n + 1) r.fail("len line needs n entries");
    std::vector<Scalar> lengths = parse_scalars(ltoks, field, r);

    Permutation perm = [&] {
        try {
            return Permutation::from_one_based(images);
        } catch (const std::invalid_argument& e) {
            r.fail(e.what());
        }
    }();

    ParsedIet out{[&] {
                      try {
                          return IntervalExchange::canonicalize(perm, lengths);
                      } catch (const std::invalid_argument& e) {
                          r.fail(e.what());
                      }
                  }(),
                  {}};

    if (!perm.is_unpartitioned())
        out.warnings.push_back(source_name + ": permutation is partitioned; canonicalized");
    for (const Scalar& l : lengths) {
        if (l.is_zero()) {
            out.warnings.push_back(source_name + ": zero-length interval dropped");
            break;
        }
    }
    if (out.warnings.empty() && out.map.size() != n)
        out.warnings.push_back(source_name + ": description was not canonical; normalized");
    return out;
}

ParsedIet parse_iet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_iet(in, path);
}

void write_iet(std::ostream& out, const IntervalExchange& f) {
    out << "iet v1\n";
    write_field_line(out, f.lengths());
    out << "n " << f.size() << "\n";
    out << "perm";
    for (int v : f.permutation().to_one_based()) out << ' ' << v;
    out << "\nlen";
    for (const Scalar& l : f.lengths()) out << ' ' << format_scalar(l);
    out << "\n";
}

void write_iet_file(const std::string& path, const IntervalExchange& f) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    write_iet(out, f);
}

StepFunction parse_stepfn(std::istream& in, const std::string& source_name) {
    LineReader r{in, source_name};
    std::vector<std::string> head = r.next("stepfn");
    if (head.size() != 2 || head[1] != "v1") r.fail("unsupported stepfn version");
    Field field = parse_field_line(r);

    std::vector<std::string> mtoks = r.next("m");
    if (mtoks.size() != 2) r.fail("m line needs one integer");
    const int m = parse_int(mtoks[1], r);
    if (m < 1) r.fail("m must be >= 1");

    std::vector<std::string> btoks = r.next("breaks");
    if (static_cast<int>(btoks.size()) != m + 2) r.fail("breaks line needs m+1 entries");
    std::vector<Scalar> breaks = parse_scalars(btoks, field, r);

    std::vector<std::string> vtoks = r.next("vals");
    if (static_cast<int>(vtoks.size()) != m + 1) r.fail("vals line needs m entries");
    std::vector<Scalar> vals = parse_scalars(vtoks, field, r);

    try {
        return StepFunction::of(std::move(breaks), std::move(vals));
    } catch (const std::invalid_argument& e) {
        r.fail(e.what());
    }
}

StepFunction parse_stepfn_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_stepfn(in, path);
}

void write_stepfn(std::ostream& out, const StepFunction& phi) {
    out << "stepfn v1\n";
    std::vector<Scalar> all = phi.breakpoints();
    all.insert(all.end(), phi.values().begin(), phi.values().end());
    write_field_line(out, all);
    out << "m " << phi.pieces() << "\n";
    out << "breaks";
    for (const Scalar& b : phi.breakpoints()) out << ' ' << format_scalar(b);
    out << "\nvals";
    for (const Scalar& v : phi.values()) out << ' ' << format_scalar(v);
    out << "\n";
}

FlowSpec parse_flow(std::istream& in, const std::string& source_name, const std::string& base_dir) {
    LineReader r{in, source_name};
    std::vector<std::string> head = r.next("flow");
    if (head.size() != 2 || head[1] != "v1") r.fail("unsupported flow version");
    Field field = parse_field_line(r);

    std::vector<std::string> ltoks = r.next("len");
    std::vector<Scalar> lengths = parse_scalars(ltoks, field, r);

    std::vector<std::string> rtoks = r.next("rates");
    std::vector<Scalar> rates = parse_scalars(rtoks, field, r);

    std::optional<IntervalExchange> conjugator;
    std::vector<std::string> ctoks;
    if (r.peek_keyword("conjugator", ctoks)) {
        if (ctoks.size() != 2) r.fail("conjugator line needs one path");
        std::filesystem::path p(ctoks[1]);
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        conjugator = parse_iet_file(p.string()).map;
    }

    try {
        return FlowSpec(std::move(lengths), std::move(rates), std::move(conjugator));
    } catch (const std::invalid_argument& e) {
        r.fail(e.what());
    }
}

FlowSpec parse_flow_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_flow(in, path, std::filesystem::path(path).parent_path().string());
}

std::string format_interval_set(const IntervalSet& s) {
    if (s.is_empty()) return "{}";
    std::string out;
    for (const auto& [a, b] : s.parts()) {
        if (!out.empty()) out += ' ';
        out += '[';
        out += format_scalar(a);
        out += ',';
        out += format_scalar(b);
        out += ')';
    }
    return out;
}

std::vector<PlotSegment> plot_segments(const IntervalExchange& f) {
    std::vector<PlotSegment> out;
    out.reserve(static_cast<size_t>(f.size()));
    for (int j = 0; j < f.size(); ++j) {
        out.push_back(PlotSegment{f.breakpoints()[static_cast<size_t>(j)],
                                  f.breakpoints()[static_cast<size_t>(j) + 1], f.image_start(j)});
    }
    return out;
}

namespace {

constexpr int kDecimalDigits = 30;

void put_scalar_cols(std::ostream& out, const Scalar& x) {
    out << format_scalar(x) << '\t' << decimal_string(x, kDecimalDigits);
}

} // namespace

void write_plot_tsv(std::ostream& out, const IntervalExchange& f) {
    out << "x_left\tx_left_dec\tx_right\tx_right_dec\ty_left\ty_left_dec\n";
    for (const PlotSegment& seg : plot_segments(f)) {
        put_scalar_cols(out, seg.x_left);
        out << '\t';
        put_scalar_cols(out, seg.x_right);
        out << '\t';
        put_scalar_cols(out, seg.y_left);
        out << '\n';
    }
}

void write_growth_tsv(std::ostream& out, const GrowthReport& report) {
    out << "n\tdelta\tdiff\n";
    for (size_t i = 0; i < report.powers.size(); ++i) {
        out << report.powers[i].first << '\t' << report.powers[i].second << '\t';
        if (i > 0) out << report.first_differences[i - 1];
        out << '\n';
    }
}

} // namespace iet
