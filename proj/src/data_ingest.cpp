#include "tempest/data_ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "tempest/errors.hpp"

namespace tempest::data {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& s, int row, int col) {
    double v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(col) +
                         ": '" + s + "' is not a number");
    return v;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

void expect_header(const std::string& got, const std::string& want, const std::string& path) {
    std::string trimmed = got;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == '\n'))
        trimmed.pop_back();
    if (trimmed != want)
        throw ParseError(path + ": expected header '" + want + "', got '" + trimmed + "'");
}

void note(LoadReport* report, const std::string& msg) {
    if (report) report->notes.push_back(msg);
}

}  // namespace

std::size_t PricePanel::ticker_index(const std::string& t) const {
    auto it = std::lower_bound(tickers.begin(), tickers.end(), t);
    if (it == tickers.end() || *it != t) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - tickers.begin());
}

std::size_t ReturnPanel::ticker_index(const std::string& t) const {
    auto it = std::lower_bound(tickers.begin(), tickers.end(), t);
    if (it == tickers.end() || *it != t) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - tickers.begin());
}

PricePanel load_prices(const std::string& path, LoadReport* report) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty file");
    expect_header(line, "date,ticker,price", path);

    struct Row {
        Date date;
        std::string ticker;
        double price;
    };
    std::vector<Row> rows;
    std::set<std::pair<std::string, std::string>> seen;  // (iso date, ticker)
    int rowno = 1;
    bool unordered = false;
    Date prev{};
    while (std::getline(in, line)) {
        ++rowno;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw ParseError("row " + std::to_string(rowno) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        Date d;
        try {
            d = parse_date(fields[0]);
        } catch (const ParseError& e) {
            throw ParseError("row " + std::to_string(rowno) + ", column 1: " + e.what());
        }
        double price = parse_number(fields[2], rowno, 3);
        if (!(price > 0.0))
            throw NonPositivePrice("row " + std::to_string(rowno) + ": price " + fields[2] +
                                   " for " + fields[1] + " on " + fields[0]);
        if (!seen.insert({fields[0], fields[1]}).second)
            throw DuplicateRow("row " + std::to_string(rowno) + ": duplicate (" + fields[0] +
                               ", " + fields[1] + ")");
        if (!rows.empty() && d < prev) unordered = true;
        prev = d;
        rows.push_back(Row{d, fields[1], price});
    }
    if (unordered) note(report, "input rows were not date-ordered; calendar sorted ascending");

    PricePanel panel;
    {
        std::set<Date> dates;
        std::set<std::string> tickers;
        for (const auto& r : rows) {
            dates.insert(r.date);
            tickers.insert(r.ticker);
        }
        panel.calendar.assign(dates.begin(), dates.end());
        panel.tickers.assign(tickers.begin(), tickers.end());
    }
    panel.prices.assign(panel.tickers.size(),
                        std::vector<double>(panel.calendar.size(), kNaN));
    for (const auto& r : rows) {
        std::size_t ti = panel.ticker_index(r.ticker);
        std::size_t di = static_cast<std::size_t>(
            std::lower_bound(panel.calendar.begin(), panel.calendar.end(), r.date) -
            panel.calendar.begin());
        panel.prices[ti][di] = r.price;
    }
    return panel;
}

void save_prices(const PricePanel& panel, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << "date,ticker,price\n";
    char buf[64];
    for (std::size_t di = 0; di < panel.calendar.size(); ++di) {
        for (std::size_t ti = 0; ti < panel.tickers.size(); ++ti) {
            double p = panel.prices[ti][di];
            if (std::isnan(p)) continue;
            std::snprintf(buf, sizeof buf, "%.17g", p);
            out << panel.calendar[di].iso() << ',' << panel.tickers[ti] << ',' << buf << '\n';
        }
    }
}

ReturnPanel to_returns(const PricePanel& panel) {
    ReturnPanel rp;
    rp.tickers = panel.tickers;
    if (panel.calendar.size() < 2) return rp;
    rp.calendar.assign(panel.calendar.begin() + 1, panel.calendar.end());
    rp.returns.assign(rp.tickers.size(), std::vector<double>(rp.calendar.size(), kNaN));
    for (std::size_t ti = 0; ti < panel.tickers.size(); ++ti) {
        const auto& px = panel.prices[ti];
        for (std::size_t t = 1; t < panel.calendar.size(); ++t) {
            if (!std::isnan(px[t]) && !std::isnan(px[t - 1]))
                rp.returns[ti][t - 1] = px[t] / px[t - 1] - 1.0;
        }
    }
    return rp;
}

MembershipHistory load_membership(const std::string& path, LoadReport* report) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty file");
    expect_header(line, "ticker,effective_from,effective_to", path);

    MembershipHistory h;
    int rowno = 1;
    while (std::getline(in, line)) {
        ++rowno;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw ParseError("row " + std::to_string(rowno) + ": expected 3 fields");
        MembershipHistory::Interval iv;
        iv.from = parse_date(fields[1]);
        iv.to = fields[2].empty() ? Date{9999, 12, 31} : parse_date(fields[2]);
        if (iv.to < iv.from)
            throw ParseError("row " + std::to_string(rowno) + ": effective_to before effective_from");
        h.intervals[fields[0]].push_back(iv);
    }
    for (auto& [ticker, ivs] : h.intervals) {
        std::sort(ivs.begin(), ivs.end(),
                  [](const auto& a, const auto& b) { return a.from < b.from; });
        for (std::size_t i = 1; i < ivs.size(); ++i) {
            if (!(ivs[i - 1].to < ivs[i].from))
                throw ParseError("overlapping membership intervals for " + ticker);
        }
    }
    note(report, "loaded membership for " + std::to_string(h.intervals.size()) + " tickers");
    return h;
}

std::set<std::string> members_on(const MembershipHistory& history, const Date& date) {
    std::set<std::string> out;
    for (const auto& [ticker, ivs] : history.intervals) {
        for (const auto& iv : ivs) {
            if (!(date < iv.from) && !(iv.to < date)) {
                out.insert(ticker);
                break;
            }
        }
    }
    return out;
}

RiskFreeSeries load_riskfree(const std::string& path, LoadReport* report) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty file");
    expect_header(line, "date,annual_yield", path);

    std::vector<std::pair<Date, double>> rows;
    int rowno = 1;
    bool unordered = false;
    while (std::getline(in, line)) {
        ++rowno;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 2)
            throw ParseError("row " + std::to_string(rowno) + ": expected 2 fields");
        Date d = parse_date(fields[0]);
        double y = parse_number(fields[1], rowno, 2);
        if (!(y > -1.0))
            throw ParseError("row " + std::to_string(rowno) + ": yield must exceed -1");
        if (!rows.empty() && d < rows.back().first) unordered = true;
        rows.emplace_back(d, y);
    }
    if (unordered) {
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        note(report, "risk-free rows were not date-ordered; sorted ascending");
    }
    RiskFreeSeries s;
    for (const auto& [d, y] : rows) {
        s.dates.push_back(d);
        s.annual_yields.push_back(y);
    }
    return s;
}

double riskfree_daily(const RiskFreeSeries& series, const Date& date) {
    if (series.dates.empty()) throw NoRateAvailable("risk-free series is empty");
    auto it = std::upper_bound(series.dates.begin(), series.dates.end(), date);
    if (it == series.dates.begin())
        throw NoRateAvailable("no risk-free rate at or before " + date.iso());
    std::size_t i = static_cast<std::size_t>(it - series.dates.begin()) - 1;
    return series.annual_yields[i] / 252.0;
}

FactorSeries load_factors(const std::string& path, LoadReport* report) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty file");
    expect_header(line, "date,mkt,smb,hml,mom,rf", path);

    struct Row {
        Date d;
        double v[5];
    };
    std::vector<Row> rows;
    int rowno = 1;
    bool unordered = false;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++rowno;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 6)
            throw ParseError("row " + std::to_string(rowno) + ": expected 6 fields");
        Row r;
        r.d = parse_date(fields[0]);
        if (!seen.insert(fields[0]).second)
            throw DuplicateRow("row " + std::to_string(rowno) + ": duplicate date " + fields[0]);
        for (int i = 0; i < 5; ++i) r.v[i] = parse_number(fields[i + 1], rowno, i + 2);
        if (!rows.empty() && r.d < rows.back().d) unordered = true;
        rows.push_back(r);
    }
    if (unordered) {
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.d < b.d; });
        note(report, "factor rows were not date-ordered; sorted ascending");
    }
    FactorSeries f;
    for (const auto& r : rows) {
        f.dates.push_back(r.d);
        f.mkt.push_back(r.v[0]);
        f.smb.push_back(r.v[1]);
        f.hml.push_back(r.v[2]);
        f.mom.push_back(r.v[3]);
        f.rf.push_back(r.v[4]);
    }
    return f;
}

}  // namespace tempest::data
