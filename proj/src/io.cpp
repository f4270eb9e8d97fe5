#include "interdec/io.hpp"

#include <fstream>
#include <sstream>

namespace interdec {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::size_t parse_index(const std::string& s, const std::string& where) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail(where, "bad value '" + s + "'");
  return std::stoul(s);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()));
  if (!j.is_string()) fail(where, "expected a rational string or integer");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rat_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of rows");
  if (j.size() != rows) {
    fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  }
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != cols) fail(at, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(row[k], at + "[" + std::to_string(k) + "]");
  }
  return m;
}

Json poset_to_json(const FinitePoset& p) {
  Json out;
  out["elements"] = p.names();
  Json leq = Json::array();
  for (const auto& [lo, hi] : p.strict_pairs())
    if (p.covers(lo, hi)) leq.push_back(Json::array({p.name(lo), p.name(hi)}));
  out["leq"] = std::move(leq);
  return out;
}

FinitePoset poset_from_json(const Json& j) {
  const Json& elems = member(j, "elements", "poset");
  if (!elems.is_array()) fail("poset.elements", "expected a list of names");
  std::vector<std::string> names;
  for (const auto& e : elems) {
    if (!e.is_string()) fail("poset.elements", "element names must be strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq")) {
    const Json& leq = j["leq"];
    if (!leq.is_array()) fail("poset.leq", "expected a list of [lo, hi] pairs");
    for (std::size_t k = 0; k < leq.size(); ++k) {
      const auto& pr = leq[k];
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string()) {
        fail("poset.leq[" + std::to_string(k) + "]", "expected [lo, hi]");
      }
      pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }
  return FinitePoset::from_generators(std::move(names), pairs);
}

Json family_to_json(const ProjectorFamily& f) {
  Json out;
  out["poset"] = poset_to_json(f.poset());
  out["dim"] = f.dim();
  Json pi = Json::object();
  for (std::size_t a = 0; a < f.poset().size(); ++a) pi[f.poset().name(a)] = matrix_to_json(f.at(a));
  out["projectors"] = std::move(pi);
  return out;
}

ProjectorFamily family_from_json(const Json& j) {
  FinitePoset p = poset_from_json(member(j, "poset", "family"));
  const std::size_t dim = count_from_json(member(j, "dim", "family"), "family.dim");
  const Json& pj = member(j, "projectors", "family");
  if (!pj.is_object()) fail("family.projectors", "expected an object keyed by element");
  for (const auto& [key, value] : pj.items()) {
    if (!p.find(key)) fail("family.projectors", "unknown element '" + key + "'");
  }
  std::vector<RatMatrix> pi;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const std::string at = "family.projectors." + p.name(a);
    if (!pj.contains(p.name(a))) fail("family.projectors", "missing element '" + p.name(a) + "'");
    pi.push_back(matrix_from_json(pj[p.name(a)], dim, dim, at));
  }
  return ProjectorFamily(std::move(p), dim, std::move(pi));
}

Json measure_to_json(const Measure& m) {
  const auto& space = m.space();
  Json out;
  Json factors = Json::object();
  for (std::size_t i = 0; i < space.factor_count(); ++i) factors[space.factor_names()[i]] = space.factor_sizes()[i];
  out["factors"] = std::move(factors);
  Json weights = Json::object();
  for (std::size_t k = 0; k < space.size(); ++k) {
    if (sgn(m.weight(k)) == 0) continue;
    std::string key;
    for (auto v : space.config_of(k)) key += (key.empty() ? "" : ",") + std::to_string(v);
    weights[key] = rat_to_json(m.weight(k));
  }
  out["weights"] = std::move(weights);
  return out;
}

Measure measure_from_json(const Json& j) {
  const Json& fj = member(j, "factors", "measure");
  if (!fj.is_object() || fj.empty()) fail("measure.factors", "expected a non-empty object of factor sizes");
  std::vector<std::string> names;
  std::vector<std::size_t> sizes;
  for (const auto& [name, size] : fj.items()) {
    names.push_back(name);
    sizes.push_back(count_from_json(size, "measure.factors." + name));
  }
  ConfigurationSpace space(std::move(names), std::move(sizes));
  const Json& wj = member(j, "weights", "measure");
  if (!wj.is_object()) fail("measure.weights", "expected an object keyed by configuration");
  std::vector<Rat> weights(space.size());
  std::vector<bool> seen(space.size(), false);
  for (const auto& [key, value] : wj.items()) {
    const std::string at = "measure.weights." + key;
    std::vector<std::size_t> config;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) config.push_back(parse_index(part, at));
    if (!key.empty() && key.back() == ',') fail(at, "trailing comma");
    if (config.size() != space.factor_count()) fail(at, "expected one value per factor");
    for (std::size_t i = 0; i < config.size(); ++i)
      if (config[i] >= space.factor_sizes()[i]) fail(at, "value out of range");
    const std::size_t idx = space.index_of(config);
    if (seen[idx]) fail(at, "configuration listed twice");
    seen[idx] = true;
    weights[idx] = rat_from_json(value, at);
  }
  return Measure(std::move(space), std::move(weights));
}

Json split_to_json(const SplitFunctor& sf) {
  const auto& p = sf.poset();
  Json out;
  out["poset"] = poset_to_json(p);
  Json dims = Json::object();
  for (std::size_t a = 0; a < p.size(); ++a) dims[p.name(a)] = sf.dim(a);
  out["dims"] = std::move(dims);
  Json g = Json::object();
  Json f = Json::object();
  for (const auto& [lo, hi] : p.strict_pairs()) {
    if (!p.covers(lo, hi)) continue;
    g[p.name(lo) + "<=" + p.name(hi)] = matrix_to_json(sf.g(lo, hi));
    f[p.name(hi) + "=>" + p.name(lo)] = matrix_to_json(sf.f(hi, lo));
  }
  out["G"] = std::move(g);
  out["F"] = std::move(f);
  return out;
}

SplitFunctor split_from_json(const Json& j) {
  FinitePoset p = poset_from_json(member(j, "poset", "split"));
  const Json& dj = member(j, "dims", "split");
  if (!dj.is_object()) fail("split.dims", "expected an object keyed by element");
  std::vector<std::size_t> dims(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!dj.contains(p.name(a))) fail("split.dims", "missing element '" + p.name(a) + "'");
    dims[a] = count_from_json(dj[p.name(a)], "split.dims." + p.name(a));
  }
  for (const auto& [key, value] : dj.items())
    if (!p.find(key)) fail("split.dims", "unknown element '" + key + "'");

  const auto read = [&](const char* field, const std::string& sep, bool is_g) {
    ArrowMap out;
    const Json& mj = member(j, field, "split");
    if (!mj.is_object()) fail(std::string("split.") + field, "expected an object keyed by relation");
    for (const auto& [key, value] : mj.items()) {
      const std::string at = std::string("split.") + field + "." + key;
      const auto pos = key.find(sep);
      if (pos == std::string::npos) fail(at, "key must look like 'x" + sep + "y'");
      const auto left = p.find(key.substr(0, pos));
      const auto right = p.find(key.substr(pos + sep.size()));
      if (!left || !right) fail(at, "unknown element");
      const std::size_t lo = is_g ? *left : *right;
      const std::size_t hi = is_g ? *right : *left;
      if (!p.less(lo, hi)) fail(at, "elements are not strictly ordered");
      const std::size_t rows = is_g ? dims[hi] : dims[lo];
      const std::size_t cols = is_g ? dims[lo] : dims[hi];
      out[{lo, hi}] = matrix_from_json(value, rows, cols, at);
    }
    return out;
  };
  const ArrowMap g = read("G", "<=", true);
  const ArrowMap f = read("F", "=>", false);
  return SplitFunctor::from_generators(std::move(p), std::move(dims), g, f);
}

}  // namespace interdec
