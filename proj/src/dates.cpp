#include "tempest/dates.hpp"

#include <cctype>
#include <cstdio>

#include "tempest/errors.hpp"

namespace tempest {

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::string Date::year_month() const {
    char buf[12];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

Date parse_date(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw ParseError("bad date '" + text + "': expected YYYY-MM-DD");
    for (int i : {0, 1, 2, 3, 5, 6, 8, 9})
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("bad date '" + text + "': expected YYYY-MM-DD");
    Date d;
    d.year = std::stoi(text.substr(0, 4));
    d.month = std::stoi(text.substr(5, 2));
    d.day = std::stoi(text.substr(8, 2));
    static const int days_in[13] = {0, 31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > days_in[d.month])
        throw ParseError("bad date '" + text + "': out of range");
    return d;
}

}  // namespace tempest
