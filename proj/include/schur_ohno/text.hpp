#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "schur_ohno/indices.hpp"

namespace schur_ohno {

// Text grammar shared by the CLI and the Python module. Parse failures
// throw InvalidArgument.
//
//   partition   "2,1"          empty text is the empty partition
//   EZ index    "1,1,2,3"
//   rows        "1 2 / 2"      rows split by '/', entries by whitespace
//   complex     "a", "a+bi", "a-bi", "bi"

Partition parse_partition(std::string_view text);
EzIndex parse_ez(std::string_view text);
std::vector<std::vector<int>> parse_rows(std::string_view text);
TableauIndex parse_index_spec(std::string_view lambda, std::string_view mu, std::string_view rows);
std::complex<double> parse_complex(std::string_view text);

std::string format_partition(const Partition& p);
std::string format_ez(const EzIndex& k);
std::string format_rows(const TableauIndex& k);
/// 15 significant digits, C locale.
std::string format_number(double x);
std::string format_complex(std::complex<double> z);

}  // namespace schur_ohno
