#include "qhaar/table_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

namespace qhaar {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_to_json(const IntPoly& p) {
  ordered_json coeffs = ordered_json::array();
  const int deg = p.degree();
  for (int e = 0; e <= std::max(deg, 0); ++e) {
    mpz_class c = p.coeff(e);
    if (c.fits_slong_p()) {
      coeffs.push_back(static_cast<std::int64_t>(c.get_si()));
    } else {
      coeffs.push_back(c.get_str());
    }
  }
  return coeffs;
}

IntPoly poly_from_json(const ordered_json& j) {
  if (!j.is_array() || j.empty()) throw inconsistency_error("table: malformed coefficient list");
  IntPoly p;
  int e = 0;
  for (const auto& item : j) {
    mpz_class c;
    if (item.is_number_integer()) {
      c = mpz_class(std::to_string(item.get<std::int64_t>()));
    } else if (item.is_string()) {
      c = mpz_class(item.get<std::string>());
    } else {
      throw inconsistency_error("table: coefficient is neither integer nor string");
    }
    p.set_coeff(e++, c);
  }
  return p;
}

ordered_json value_to_json(const QRational& v) {
  ordered_json j;
  j["num"] = poly_to_json(v.num());
  j["den"] = poly_to_json(v.den());
  return j;
}

QRational value_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw inconsistency_error("table: value is missing num/den");
  IntPoly num = poly_from_json(j.at("num"));
  IntPoly den = poly_from_json(j.at("den"));
  QRational v(num, den);
  if (v.num() != num || v.den() != den)
    throw inconsistency_error("table: stored rational function is not canonical");
  return v;
}

}  // namespace

std::string qrational_to_json(const QRational& v) { return value_to_json(v).dump(); }

QRational qrational_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw inconsistency_error(std::string("value: invalid JSON: ") + e.what());
  }
  return value_from_json(j);
}

std::string table_to_json(const HaarTable& t) {
  ordered_json j;
  j["order"] = t.order;
  ordered_json values = ordered_json::object();
  for (const auto& e : enumerate_basis(t.order)) values[e.key()] = value_to_json(t.values.at(e));
  j["values"] = std::move(values);
  j["format_version"] = 1;
  return j.dump(2) + "\n";
}

HaarTable table_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw inconsistency_error(std::string("table: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("values") ||
      !j.contains("format_version"))
    throw inconsistency_error("table: missing required fields");
  if (j.at("format_version").get<int>() != 1)
    throw inconsistency_error("table: unsupported format version");
  HaarTable t;
  t.order = j.at("order").get<int>();
  if (t.order < 0) throw inconsistency_error("table: negative order");
  for (const auto& [key, val] : j.at("values").items())
    t.values.emplace(StdExponents::parse_key(key), value_from_json(val));
  // The value set must be exactly the basis of the declared order.
  const auto basis = enumerate_basis(t.order);
  if (t.values.size() != basis.size())
    throw inconsistency_error("table: value count does not match the basis");
  for (const auto& e : basis)
    if (!t.values.count(e))
      throw inconsistency_error("table: missing basis entry " + e.key());
  return t;
}

void save_table_file(const std::string& path, const HaarTable& t) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << table_to_json(t);
  }
  fs::rename(tmp, target);
}

std::optional<HaarTable> try_load_table_file(const std::string& path, int expected_order) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  HaarTable t = table_from_json(text);
  if (t.order != expected_order)
    throw inconsistency_error("table: cached order does not match the file name");
  return t;
}

}  // namespace qhaar
