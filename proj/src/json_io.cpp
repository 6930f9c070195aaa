#include "multirel/json_io.hpp"

#include <fstream>
#include <sstream>

namespace multirel {

namespace {

std::size_t size_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidValue, std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw Error(ErrorKind::InvalidValue, std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::size_t element(const Json& v, std::size_t bound, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<std::size_t>() >= bound) {
    throw Error(ErrorKind::InvalidValue, std::string(what) + " " + v.dump() + " out of range " + std::to_string(bound));
  }
  return v.get<std::size_t>();
}

}  // namespace

Json subset_json(Mask m) {
  Json out = Json::array();
  for (std::size_t e : mask_elements(m)) out.push_back(e);
  return out;
}

Mask subset_from_json(const Json& j, std::size_t width) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidValue, "subset must be an array, got " + j.dump());
  Mask m = 0;
  for (const Json& e : j) m |= singleton(element(e, width, "subset element"));
  return m;
}

Json to_json(const Rel& r) {
  Json pairs = Json::array();
  for (auto [a, b] : r.pairs()) pairs.push_back(Json::array({a, b}));
  return Json{{"src", r.src()}, {"dst", r.dst()}, {"pairs", std::move(pairs)}};
}

Json to_json(const MRel& r) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < r.src(); ++a) {
    Json row = Json::array();
    for (Mask m : r.row(a)) row.push_back(subset_json(m));
    rows.push_back(std::move(row));
  }
  return Json{{"src", r.src()}, {"dst", r.dst()}, {"rows", std::move(rows)}};
}

Json to_json(const Instance& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Rel rel_from_json(const Json& j) {
  const std::size_t src = size_field(j, "src");
  const std::size_t dst = size_field(j, "dst");
  if (!j.contains("pairs") || !j.at("pairs").is_array()) throw Error(ErrorKind::InvalidValue, "relation needs a \"pairs\" array");
  Rel out(src, dst);
  for (const Json& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::InvalidValue, "pair must be [a,b], got " + p.dump());
    out.set(element(p[0], src, "source element"), element(p[1], dst, "target element"));
  }
  return out;
}

MRel mrel_from_json(const Json& j) {
  const std::size_t src = size_field(j, "src");
  const std::size_t dst = size_field(j, "dst");
  if (dst > kMaskCap) throw Error(ErrorKind::MaskTooWide, "multirelation target of size " + std::to_string(dst));
  if (!j.contains("rows") || !j.at("rows").is_array()) throw Error(ErrorKind::InvalidValue, "multirelation needs a \"rows\" array");
  const Json& rows = j.at("rows");
  if (rows.size() != src) {
    throw Error(ErrorKind::InvalidValue, "expected " + std::to_string(src) + " rows, got " + std::to_string(rows.size()));
  }
  std::vector<MRel::Row> out(src);
  for (std::size_t a = 0; a < src; ++a) {
    if (!rows[a].is_array()) throw Error(ErrorKind::InvalidValue, "row must be an array of subsets");
    for (const Json& s : rows[a]) out[a].push_back(subset_from_json(s, dst));
  }
  return MRel(src, dst, std::move(out));
}

Instance instance_from_json(const Json& j) {
  if (j.is_object() && j.contains("rows")) return mrel_from_json(j);
  if (j.is_object() && j.contains("pairs")) return rel_from_json(j);
  throw Error(ErrorKind::InvalidValue, "expected a relation (\"pairs\") or multirelation (\"rows\")");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidValue, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidValue, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidValue, "cannot write " + path);
  out << text;
}

}  // namespace multirel
