#include "interdec/cli.hpp"

#include <sstream>

namespace interdec {

std::string command_name(Command c) { return c == Command::kCheck ? "check" : "decompose"; }

std::string kind_name(InputKind k) {
  switch (k) {
    case InputKind::kProjectors:
      return "projectors";
    case InputKind::kMeasure:
      return "measure";
    case InputKind::kSplit:
      return "split";
  }
  return "?";
}

namespace {

Json command_echo(const CliRequest& req) {
  Json c;
  c["name"] = command_name(req.command);
  c["kind"] = kind_name(req.kind);
  return c;
}

Json family_report(const CliRequest& req, const ProjectorFamily& f, int& exit_code) {
  const auto& p = f.poset();
  Json rep;
  rep["command"] = command_echo(req);
  const DecomposeResult res = decompose(f);
  if (const auto* fail = std::get_if<DecompositionFailure>(&res)) {
    exit_code = kExitNotDecomposable;
    rep["verdict"] = "not-decomposable";
    rep["witnesses"] = Json::array({Json{{"a", p.name(fail->witness.a)}, {"b", p.name(fail->witness.b)}}});
    return rep;
  }
  const auto& dec = std::get<Decomposition>(res);
  exit_code = dec.certified ? kExitDecomposable : kExitNotDecomposable;
  rep["verdict"] = dec.certified ? "decomposable" : "not-decomposable";
  rep["witnesses"] = Json::array();
  if (!dec.certified) return rep;

  Json payload;
  payload["certified"] = true;
  if (req.command == Command::kDecompose) {
    Json s = Json::object();
    Json bases = Json::object();
    for (std::size_t a = 0; a < p.size(); ++a) {
      s[p.name(a)] = matrix_to_json(dec.s.s[a]);
      bases[p.name(a)] = matrix_to_json(dec.subspaces[a].basis());
    }
    s[kTopName] = matrix_to_json(dec.s.s_top);
    bases[kTopName] = matrix_to_json(dec.subspaces.back().basis());
    payload["s"] = std::move(s);
    payload["bases"] = std::move(bases);
  }
  rep["decomposition"] = std::move(payload);
  Json dims = Json::object();
  for (std::size_t a = 0; a < p.size(); ++a) dims[p.name(a)] = dec.subspaces[a].dim();
  dims[kTopName] = dec.subspaces.back().dim();
  rep["dims"] = std::move(dims);
  return rep;
}

Json split_report(const CliRequest& req, const SplitFunctor& sf, int& exit_code) {
  const auto& p = sf.poset();
  Json rep;
  rep["command"] = command_echo(req);
  const SplitDecomposeResult res = decompose_split(sf);
  if (const auto* fail = std::get_if<SplitFailure>(&res)) {
    exit_code = kExitNotDecomposable;
    rep["verdict"] = "not-decomposable";
    Json w = Json::array();
    for (const auto& x : fail->witnesses)
      w.push_back(Json{{"alpha", p.name(x.alpha)}, {"a", p.name(x.a)}, {"b", p.name(x.b)}});
    rep["witnesses"] = std::move(w);
    return rep;
  }
  const auto& dec = std::get<SplitDecomposition>(res);
  exit_code = dec.certified ? kExitDecomposable : kExitNotDecomposable;
  rep["verdict"] = dec.certified ? "decomposable" : "not-decomposable";
  rep["witnesses"] = Json::array();
  if (!dec.certified) return rep;

  Json payload;
  payload["certified"] = true;
  if (req.command == Command::kDecompose) {
    Json comps = Json::object();
    Json psi = Json::object();
    for (std::size_t a = 0; a < p.size(); ++a) {
      Json c;
      c["dim"] = dec.components[a].dim;
      c["basis"] = matrix_to_json(dec.components[a].base_basis);
      comps[p.name(a)] = std::move(c);
      psi[p.name(a)] = matrix_to_json(dec.psi[a]);
    }
    payload["components"] = std::move(comps);
    payload["psi"] = std::move(psi);
  }
  rep["decomposition"] = std::move(payload);
  Json dims = Json::object();
  for (std::size_t a = 0; a < p.size(); ++a) dims[p.name(a)] = dec.components[a].dim;
  rep["dims"] = std::move(dims);
  return rep;
}

std::string render_matrix(const Json& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t k = 0; k < m[i].size(); ++k) out += (k ? " " : "") + m[i][k].get<std::string>();
  }
  return out + "]";
}

std::string render_text(const Json& rep) {
  std::ostringstream out;
  out << "command: " << rep["command"]["name"].get<std::string>() << " ("
      << rep["command"]["kind"].get<std::string>() << ")\n";
  out << "verdict: " << rep["verdict"].get<std::string>() << "\n";
  if (rep.contains("error")) out << "error: " << rep["error"].get<std::string>() << "\n";
  for (const auto& w : rep.value("witnesses", Json::array())) {
    out << "witness:";
    if (w.contains("alpha")) out << " alpha=" << w["alpha"].get<std::string>();
    out << " a=" << w["a"].get<std::string>() << " b=" << w["b"].get<std::string>() << "\n";
  }
  if (rep.contains("dims")) {
    out << "dims:";
    for (const auto& [name, d] : rep["dims"].items()) out << " " << name << "=" << d.get<std::size_t>();
    out << "\n";
  }
  if (rep.contains("decomposition")) {
    const auto& d = rep["decomposition"];
    for (const char* field : {"s", "bases", "psi"}) {
      if (!d.contains(field)) continue;
      for (const auto& [name, m] : d[field].items()) out << field << "[" << name << "] = " << render_matrix(m) << "\n";
    }
    if (d.contains("components"))
      for (const auto& [name, c] : d["components"].items())
        out << "basis[" << name << "] = " << render_matrix(c["basis"]) << "\n";
  }
  return out.str();
}

CliResult finish(const CliRequest& req, const Json& rep, int exit_code, std::string error) {
  CliResult r;
  r.exit_code = exit_code;
  r.error = std::move(error);
  r.output = req.format == OutputFormat::kJson ? rep.dump(2) + "\n" : render_text(rep);
  return r;
}

CliResult invalid(const CliRequest& req, const std::string& message) {
  Json rep;
  rep["command"] = command_echo(req);
  rep["verdict"] = "invalid-input";
  rep["witnesses"] = Json::array();
  rep["error"] = message;
  return finish(req, rep, kExitInvalidInput, message);
}

CliResult run_document(const CliRequest& req, const Json& doc) {
  try {
    int code = kExitInvalidInput;
    const Json rep = build_report(req, doc, code);
    return finish(req, rep, code, "");
  } catch (const Error& e) {
    return invalid(req, e.what());
  } catch (const Json::exception& e) {
    return invalid(req, std::string("schema violation: ") + e.what());
  }
}

}  // namespace

Json build_report(const CliRequest& req, const Json& document, int& exit_code) {
  switch (req.kind) {
    case InputKind::kProjectors:
      return family_report(req, family_from_json(document), exit_code);
    case InputKind::kMeasure:
      return family_report(req, build_family(measure_from_json(document)), exit_code);
    case InputKind::kSplit:
      return split_report(req, split_from_json(document), exit_code);
  }
  throw Error("unknown input kind");
}

CliResult run_request(const CliRequest& req, const std::string& document_text) {
  try {
    return run_document(req, parse_json(document_text));
  } catch (const Error& e) {
    return invalid(req, e.what());
  }
}

CliResult run_request_file(const CliRequest& req, const std::string& path) {
  try {
    return run_document(req, load_json_file(path));
  } catch (const Error& e) {
    return invalid(req, e.what());
  }
}

}  // namespace interdec
