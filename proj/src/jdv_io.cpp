#include "jdv/jdv_io.hpp"

#include <istream>
#include <limits>
#include <set>
#include <sstream>

#include "jdv/errors.hpp"

namespace jdv {

using nlohmann::json;

namespace {

std::int64_t integer_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  if (!it->is_number_integer()) {
    throw InputError(where + ": field '" + key + "' must be an integer, got " + it->dump());
  }
  return it->get<std::int64_t>();
}

int small_int(std::int64_t v, const char* key, const std::string& where) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw InputError(where + ": field '" + key + "' out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

json to_json(const Jdv& j) {
  json entries = json::array();
  for (const auto& [pos, count] : j.entries()) {
    entries.push_back({{"i", pos.low}, {"k", pos.high}, {"count", count}});
  }
  return {{"n", j.n()}, {"entries", std::move(entries)}};
}

Jdv jdv_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("JDV document must be a JSON object");
  Jdv j(small_int(integer_field(doc, "n", "JDV document"), "n", "JDV document"));
  auto it = doc.find("entries");
  if (it == doc.end() || !it->is_array()) {
    throw InputError("JDV document: field 'entries' must be an array");
  }
  std::set<DegreePair> seen;
  std::size_t index = 0;
  for (const json& e : *it) {
    const std::string where = "entries[" + std::to_string(index++) + "]";
    if (!e.is_object()) throw InputError(where + ": expected an object {i, k, count}");
    const int i = small_int(integer_field(e, "i", where), "i", where);
    const int k = small_int(integer_field(e, "k", where), "k", where);
    const std::int64_t count = integer_field(e, "count", where);
    if (!seen.insert({i, k}).second) {
      throw InputError(where + ": duplicate position (" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
    try {
      j.set(i, k, count);
    } catch (const InputError& err) {
      throw InputError(where + ": " + err.what());
    }
  }
  return j;
}

Jdv read_jdv(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw InputError(std::string("malformed JDV JSON: ") + err.what());
  }
  return jdv_from_json(doc);
}

Jdv parse_jdv(const std::string& text) {
  std::istringstream in(text);
  return read_jdv(in);
}

}  // namespace jdv
