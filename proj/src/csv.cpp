#include "wgtunnel/csv.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <sstream>

namespace wgtunnel {

namespace {

constexpr std::size_t kColumns = 9;

void put_optional(std::ostream& out, const std::optional<double>& v) {
    out << ',';
    if (v) out << format_double(*v);
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::ConfigInvalid, "csv line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view field, std::size_t line) {
    double v = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc{} || ptr != end) bad_line(line, "bad number '" + std::string(field) + "'");
    return v;
}

std::optional<double> parse_optional(std::string_view field, std::size_t line) {
    if (field.empty()) return std::nullopt;
    return parse_double(field, line);
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw Error(ErrorKind::InvalidArgument, "format_double overflow");
    return {buf.data(), ptr};
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        out << format_double(r.omega) << ',' << to_string(r.regime);
        put_optional(out, r.h_outer);
        put_optional(out, r.h_inner);
        put_optional(out, r.kappa);
        put_optional(out, r.T);
        put_optional(out, r.R);
        put_optional(out, r.gamma);
        put_optional(out, r.lambda_mag);
        out << '\n';
    }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    write_sweep_csv(out, rows);
    return out.str();
}

std::vector<SweepRow> parse_sweep_csv(std::string_view text) {
    std::vector<SweepRow> rows;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos) bad_line(line_no + 1, "missing trailing newline");
        const auto line = text.substr(0, nl);
        text.remove_prefix(nl + 1);
        ++line_no;

        if (!seen_header) {
            if (line != kSweepCsvHeader) bad_line(line_no, "unexpected header");
            seen_header = true;
            continue;
        }

        std::array<std::string_view, kColumns> f{};
        std::size_t col = 0;
        std::string_view rest = line;
        while (true) {
            if (col == kColumns) bad_line(line_no, "too many fields");
            const auto comma = rest.find(',');
            f[col++] = rest.substr(0, comma);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (col != kColumns) bad_line(line_no, "expected 9 fields");

        SweepRow r;
        r.omega = parse_double(f[0], line_no);
        const auto status = parse_row_status(f[1]);
        if (!status) bad_line(line_no, "unknown regime '" + std::string(f[1]) + "'");
        r.regime = *status;
        r.h_outer = parse_optional(f[2], line_no);
        r.h_inner = parse_optional(f[3], line_no);
        r.kappa = parse_optional(f[4], line_no);
        r.T = parse_optional(f[5], line_no);
        r.R = parse_optional(f[6], line_no);
        r.gamma = parse_optional(f[7], line_no);
        r.lambda_mag = parse_optional(f[8], line_no);
        rows.push_back(r);
    }
    if (!seen_header) bad_line(1, "missing header");
    return rows;
}

}  // namespace wgtunnel
