#pragma once

#include <optional>
#include <string>

#include "qhaar/haar.hpp"

namespace qhaar {

/// Canonical wire form of a rational function: two integer-coefficient lists
/// in ascending exponent order, {"num":[c0,c1,...],"den":[d0,d1,...]}.
/// Canonical form is required on write and verified on read.
std::string qrational_to_json(const QRational& v);
QRational qrational_from_json(const std::string& text);

/// Table file format: {"order":m,"values":{"c1.c2.c3.c4.c5.c6":{...}},
/// "format_version":1}; keys in basis order, values canonical.
std::string table_to_json(const HaarTable& t);
HaarTable table_from_json(const std::string& text);

/// Atomic write (temp file + rename) of the table file for one order.
void save_table_file(const std::string& path, const HaarTable& t);

/// Loads and validates a cached table. Returns nullopt when the file does
/// not exist; throws inconsistency_error when it exists but is corrupt or
/// does not match the expected order and basis.
std::optional<HaarTable> try_load_table_file(const std::string& path, int expected_order);

}  // namespace qhaar
