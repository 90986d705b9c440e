#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tempest/dates.hpp"

// Loading and validation of price panels, index-membership histories,
// risk-free rate series and factor files. CSV schemas (exact headers):
//   prices     date,ticker,price
//   membership ticker,effective_from,effective_to   (empty to = open-ended)
//   risk-free  date,annual_yield
//   factors    date,mkt,smb,hml,mom,rf              (percent per month)

namespace tempest::data {

// Everything dropped, reordered or otherwise normalized during a load is
// reported here; nothing is repaired silently.
struct LoadReport {
    std::vector<std::string> notes;
};

struct PricePanel {
    std::vector<Date> calendar;                // ascending union of dates
    std::vector<std::string> tickers;          // sorted
    std::vector<std::vector<double>> prices;   // [ticker][day], NaN = missing
    std::string currency = "USD";

    std::size_t ticker_index(const std::string& t) const;  // npos if absent
};

PricePanel load_prices(const std::string& path, LoadReport* report = nullptr);
void save_prices(const PricePanel& panel, const std::string& path);

struct ReturnPanel {
    std::vector<Date> calendar;                // return dates (second of each pair)
    std::vector<std::string> tickers;
    std::vector<std::vector<double>> returns;  // [ticker][day], NaN = missing

    std::size_t ticker_index(const std::string& t) const;
};

// Simple returns p_t/p_{t-1} - 1 across adjacent present-price pairs;
// gaps stay missing.
ReturnPanel to_returns(const PricePanel& panel);

struct MembershipHistory {
    struct Interval {
        Date from;
        Date to;  // inclusive
    };
    std::map<std::string, std::vector<Interval>> intervals;
};

MembershipHistory load_membership(const std::string& path, LoadReport* report = nullptr);

// Assets whose membership intervals contain the date, endpoints inclusive.
std::set<std::string> members_on(const MembershipHistory& history, const Date& date);

struct RiskFreeSeries {
    std::vector<Date> dates;           // ascending
    std::vector<double> annual_yields; // fraction per year
};

RiskFreeSeries load_riskfree(const std::string& path, LoadReport* report = nullptr);

// Most recent yield at or before the date, divided by 252.
// Throws NoRateAvailable before the first observation.
double riskfree_daily(const RiskFreeSeries& series, const Date& date);

struct FactorSeries {
    std::vector<Date> dates;  // ascending
    std::vector<double> mkt, smb, hml, mom, rf;  // percent per month
};

FactorSeries load_factors(const std::string& path, LoadReport* report = nullptr);

}  // namespace tempest::data
