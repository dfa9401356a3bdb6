#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zeta/tables.hpp"
#include "zeta/verify.hpp"

namespace zeta::report {

enum class Format { csv, json, pretty };

// throws std::invalid_argument on unknown names
Format parse_format(const std::string& name);

// One emitted number: method tag, named parameters, value, validity.  The
// machine formats never print a bare number.
struct Record {
    std::string method;
    std::vector<std::pair<std::string, double>> params;
    double value = 0.0;
    bool valid = true;
    std::string evidence;  // empty -> omitted
};

std::string render_records(const std::vector<Record>& recs, Format f);

// Table rows rendered in the reference-file column order; machine formats
// wrap each row in a Record (method + named params).
std::string render_table33(const std::vector<tables::Row33>& rows, Format f);
std::string render_table42(const std::vector<tables::Row42>& rows, Format f);
std::string render_table66(const std::vector<tables::Row66>& rows, Format f);

std::string render_diff(const tables::DiffReport& rep,
                        const std::string& label, Format f);

std::string render_suite(
    const verify::SuiteReport& rep,
    const std::vector<std::pair<std::string, double>>& params, Format f);

}  // namespace zeta::report
