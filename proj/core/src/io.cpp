#include "hopf/io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace hopf {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("JSON parse error: ") + e.what());
  }
}

void require_keys(const json& j, const std::set<std::string>& required, const std::set<std::string>& optional,
                  const std::string& what) {
  if (!j.is_object()) throw FormatError(what + ": top level must be an object");
  for (const auto& [key, _] : j.items())
    if (!required.count(key) && !optional.count(key)) throw FormatError(what + ": unknown field \"" + key + "\"");
  for (const auto& key : required)
    if (!j.contains(key)) throw FormatError(what + ": missing field \"" + key + "\"");
}

std::size_t index_of(const json& v, std::size_t bound, const std::string& field) {
  if (!v.is_number_integer()) throw FormatError(field + ": index must be an integer");
  const auto i = v.get<long long>();
  if (i < 0 || static_cast<unsigned long long>(i) >= bound)
    throw FormatError(field + ": index " + std::to_string(i) + " out of range");
  return static_cast<std::size_t>(i);
}

CycNum coefficient(const json& v, int conductor, const std::string& field) {
  if (!v.is_string()) throw FormatError(field + ": coefficient must be a string");
  try {
    return cyc_parse(v.get<std::string>(), conductor);
  } catch (const CycParseError& e) {
    throw FormatError(field + ": " + e.what());
  }
}

// Each entry is `arity` indices followed by a coefficient string.
template <typename Store>
void read_entries(const json& j, const std::string& field, std::size_t arity, std::size_t bound, int conductor,
                  Store&& store) {
  const json& list = j.at(field);
  if (!list.is_array()) throw FormatError(field + ": must be an array");
  std::set<std::vector<std::size_t>> seen;
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != arity + 1)
      throw FormatError(field + ": each entry must have " + std::to_string(arity) + " indices and a coefficient");
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < arity; ++a) idx.push_back(index_of(e[a], bound, field));
    if (!seen.insert(idx).second) throw FormatError(field + ": duplicate entry");
    store(idx, coefficient(e[arity], conductor, field));
  }
}

int read_conductor(const json& j) {
  const json& c = j.at("conductor");
  if (!c.is_number_integer() || c.get<long long>() < 1 || c.get<long long>() > 100000)
    throw FormatError("conductor must be a positive integer");
  return c.get<int>();
}

std::size_t read_dim(const json& j) {
  const json& d = j.at("dim");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 4096)
    throw FormatError("dim must be a positive integer");
  return d.get<std::size_t>();
}

class EntryWriter {
 public:
  EntryWriter(std::ostringstream& os, const std::string& field) : os_(os) { os_ << "  " << json(field).dump() << ": ["; }
  template <typename... Idx>
  void add(const CycNum& c, Idx... idx) {
    if (c.is_zero()) return;
    os_ << (first_ ? "\n    [" : ",\n    [");
    ((os_ << idx << ", "), ...);
    os_ << json(c.to_string()).dump() << "]";
    first_ = false;
  }
  void finish(bool last = false) {
    os_ << (first_ ? "]" : "\n  ]") << (last ? "\n" : ",\n");
  }

 private:
  std::ostringstream& os_;
  bool first_ = true;
};

}  // namespace

HopfAlgebra algebra_from_json(const std::string& text) {
  const json j = parse_json(text);
  require_keys(j, {"name", "conductor", "dim", "mult", "unit", "comult", "counit", "antipode"}, {"basis"},
               "algebra file");
  if (!j.at("name").is_string()) throw FormatError("name must be a string");
  const int n = read_conductor(j);
  const std::size_t d = read_dim(j);
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    if (!b.is_array() || b.size() != d) throw FormatError("basis must be an array of dim labels");
    for (const auto& l : b) {
      if (!l.is_string()) throw FormatError("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  Tensor3 mult(d, n), comult(d, n);
  Vec unit = zero_vec(d, n), counit = zero_vec(d, n);
  Mat s(d, d, n);
  read_entries(j, "mult", 3, d, n, [&](const auto& i, CycNum c) { mult(i[0], i[1], i[2]) = std::move(c); });
  read_entries(j, "comult", 3, d, n, [&](const auto& i, CycNum c) { comult(i[0], i[1], i[2]) = std::move(c); });
  read_entries(j, "unit", 1, d, n, [&](const auto& i, CycNum c) { unit[i[0]] = std::move(c); });
  read_entries(j, "counit", 1, d, n, [&](const auto& i, CycNum c) { counit[i[0]] = std::move(c); });
  read_entries(j, "antipode", 2, d, n, [&](const auto& i, CycNum c) { s(i[0], i[1]) = std::move(c); });
  return HopfAlgebra(j.at("name").get<std::string>(), n, std::move(mult), std::move(unit), std::move(comult),
                     std::move(counit), std::move(s), std::move(labels));
}

std::string algebra_to_json(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << json(h.name()).dump() << ",\n";
  os << "  \"conductor\": " << h.conductor() << ",\n";
  os << "  \"dim\": " << d << ",\n";
  if (!h.labels().empty()) os << "  \"basis\": " << json(h.labels()).dump() << ",\n";
  {
    EntryWriter w(os, "mult");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) w.add(h.mult()(i, j, k), i, j, k);
    w.finish();
  }
  {
    EntryWriter w(os, "unit");
    for (std::size_t i = 0; i < d; ++i) w.add(h.unit()[i], i);
    w.finish();
  }
  {
    EntryWriter w(os, "comult");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) w.add(h.comult()(i, j, k), i, j, k);
    w.finish();
  }
  {
    EntryWriter w(os, "counit");
    for (std::size_t i = 0; i < d; ++i) w.add(h.counit()[i], i);
    w.finish();
  }
  {
    EntryWriter w(os, "antipode");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) w.add(h.antipode()(i, j), i, j);
    w.finish(true);
  }
  os << "}\n";
  return os.str();
}

TwistData twist_from_json(const std::string& text) {
  const json j = parse_json(text);
  require_keys(j, {"conductor", "dim", "F"}, {"F_inv"}, "twist file");
  TwistData t;
  t.conductor = read_conductor(j);
  t.dim = read_dim(j);
  const std::size_t d = t.dim;
  t.f = zero_vec(d * d, t.conductor);
  read_entries(j, "F", 2, d, t.conductor, [&](const auto& i, CycNum c) { t.f[i[0] * d + i[1]] = std::move(c); });
  if (j.contains("F_inv")) {
    Vec inv = zero_vec(d * d, t.conductor);
    read_entries(j, "F_inv", 2, d, t.conductor,
                 [&](const auto& i, CycNum c) { inv[i[0] * d + i[1]] = std::move(c); });
    t.f_inv = std::move(inv);
  }
  return t;
}

std::string twist_to_json(const TwistData& t) {
  const std::size_t d = t.dim;
  if (t.f.size() != d * d || (t.f_inv && t.f_inv->size() != d * d)) throw ShapeError("twist length mismatch");
  std::ostringstream os;
  os << "{\n";
  os << "  \"conductor\": " << t.conductor << ",\n";
  os << "  \"dim\": " << d << ",\n";
  {
    EntryWriter w(os, "F");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) w.add(t.f[i * d + j].lifted(t.conductor), i, j);
    w.finish(!t.f_inv.has_value());
  }
  if (t.f_inv) {
    EntryWriter w(os, "F_inv");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) w.add((*t.f_inv)[i * d + j].lifted(t.conductor), i, j);
    w.finish(true);
  }
  os << "}\n";
  return os.str();
}

GroupPresentation group_from_json(const std::string& text) {
  const json j = parse_json(text);
  require_keys(j, {"table"}, {"labels", "name"}, "group file");
  const json& table = j.at("table");
  if (!table.is_array() || table.empty()) throw FormatError("table must be a nonempty array");
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != table.size()) throw FormatError("table must be square");
    std::vector<std::size_t> r;
    for (const auto& v : row) r.push_back(index_of(v, table.size(), "table"));
    rows.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) throw FormatError("labels must be an array");
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw FormatError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  std::string name = "G";
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw FormatError("name must be a string");
    name = j.at("name").get<std::string>();
  }
  try {
    return GroupPresentation::from_table(std::move(rows), std::move(labels), std::move(name));
  } catch (const GroupError& e) {
    throw FormatError(std::string("group file: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << contents;
}

HopfAlgebra load_algebra(const std::string& path) { return algebra_from_json(read_file(path)); }
void save_algebra(const std::string& path, const HopfAlgebra& h) { write_file(path, algebra_to_json(h)); }
TwistData load_twist(const std::string& path) { return twist_from_json(read_file(path)); }
void save_twist(const std::string& path, const TwistData& t) { write_file(path, twist_to_json(t)); }

}  // namespace hopf
