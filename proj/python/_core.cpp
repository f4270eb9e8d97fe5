// Python bindings. Documents use the same dict layout as the JSON files;
// matrix entries may be int, str ("p/q") or fractions.Fraction on input and
// come back as Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "interdec/cli.hpp"
#include "interdec/io.hpp"

namespace py = pybind11;
using namespace interdec;

namespace {

py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

Json to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance(obj, fraction_type())) return py::str(obj).cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    Json out = Json::object();
    for (const auto& [k, v] : obj.cast<py::dict>()) out[py::str(k).cast<std::string>()] = to_json(v);
    return out;
  }
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    Json out = Json::array();
    for (const auto& v : obj) out.push_back(to_json(v));
    return out;
  }
  throw py::type_error("unsupported value in document: " + py::repr(obj).cast<std::string>());
}

py::object rat_to_py(const Rat& r) { return fraction_type()(to_string(r)); }

py::list matrix_to_py(const RatMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t k = 0; k < m.cols(); ++k) row.append(rat_to_py(m(i, k)));
    rows.append(row);
  }
  return rows;
}

py::dict family_result(const ProjectorFamily& f) {
  const auto& p = f.poset();
  py::dict out;
  const DecomposeResult res = decompose(f);
  if (const auto* fail = std::get_if<DecompositionFailure>(&res)) {
    out["certified"] = false;
    out["witness"] = py::make_tuple(p.name(fail->witness.a), p.name(fail->witness.b));
    return out;
  }
  const auto& dec = std::get<Decomposition>(res);
  py::dict s, bases, dims;
  for (std::size_t a = 0; a <= p.size(); ++a) {
    const std::string name = a < p.size() ? p.name(a) : kTopName;
    s[py::str(name)] = matrix_to_py(a < p.size() ? dec.s.s[a] : dec.s.s_top);
    bases[py::str(name)] = matrix_to_py(dec.subspaces[a].basis());
    dims[py::str(name)] = dec.subspaces[a].dim();
  }
  out["certified"] = dec.certified;
  out["s"] = s;
  out["bases"] = bases;
  out["dims"] = dims;
  return out;
}

py::list split_witnesses(const FinitePoset& p, const std::vector<SplitWitness>& ws) {
  py::list out;
  for (const auto& w : ws) out.append(py::make_tuple(p.name(w.alpha), p.name(w.a), p.name(w.b)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact interaction decompositions (C++ core)";
  py::register_exception<Error>(m, "InterdecError", PyExc_ValueError);

  m.def(
      "mobius",
      [](const py::dict& poset) {
        const FinitePoset p = poset_from_json(to_json(poset));
        const MobiusTable mu(p);
        py::dict out;
        for (std::size_t a = 0; a < p.size(); ++a)
          for (std::size_t b = 0; b < p.size(); ++b)
            if (p.leq(b, a)) out[py::make_tuple(p.name(a), p.name(b))] = mu.value(a, b);
        return out;
      },
      "Moebius function as {(a, b): mu(a, b)} for b <= a.");

  m.def(
      "check_functorial", [](const py::dict& f) { return check_functorial(family_from_json(to_json(f))); },
      "pi_a pi_b == pi_b whenever b <= a.");
  m.def(
      "check_presheafable", [](const py::dict& f) { return check_presheafable(family_from_json(to_json(f))); },
      "pi_b pi_a == pi_b whenever b <= a.");
  m.def(
      "check_intersection",
      [](const py::dict& f) { return check_intersection_general(family_from_json(to_json(f))); },
      "Intersection property of a projector family.");
  m.def(
      "compute_s",
      [](const py::dict& f) {
        const ProjectorFamily fam = family_from_json(to_json(f));
        const SFamily s = compute_s(fam);
        py::dict out;
        for (std::size_t a = 0; a < fam.poset().size(); ++a) out[py::str(fam.poset().name(a))] = matrix_to_py(s.s[a]);
        out[py::str(kTopName)] = matrix_to_py(s.s_top);
        return out;
      },
      "Moebius transform s_a of the projectors, plus the residual under the top name.");
  m.def(
      "decompose", [](const py::dict& f) { return family_result(family_from_json(to_json(f))); },
      "Certified decomposition, or {'certified': False, 'witness': (a, b)}.");

  m.def(
      "conditional_expectation",
      [](const py::dict& measure, const std::vector<std::string>& factors) {
        const Measure mm = measure_from_json(to_json(measure));
        return matrix_to_py(conditional_expectation(mm, mm.space().mask_of(factors)));
      },
      py::arg("measure"), py::arg("factors"), "Matrix of E[. | factors].");
  m.def(
      "is_product", [](const py::dict& measure) { return is_product(measure_from_json(to_json(measure))).is_product; },
      "Whether the measure is the product of its single-factor marginals.");
  m.def(
      "decompose_measure",
      [](const py::dict& measure) { return family_result(build_family(measure_from_json(to_json(measure)))); },
      "Interaction decomposition over the factor subsets.");

  m.def(
      "check_split_intersection",
      [](const py::dict& split) {
        const SplitFunctor sf = split_from_json(to_json(split));
        const auto rep = check_intersection(sf);
        return py::make_tuple(rep.holds, split_witnesses(sf.poset(), rep.witnesses));
      },
      "(holds, [(alpha, a, b), ...]) for a split functor document.");
  m.def(
      "decompose_split",
      [](const py::dict& split) {
        const SplitFunctor sf = split_from_json(to_json(split));
        const auto& p = sf.poset();
        const SplitDecomposeResult res = decompose_split(sf);
        py::dict out;
        if (const auto* fail = std::get_if<SplitFailure>(&res)) {
          out["certified"] = false;
          out["witnesses"] = split_witnesses(p, fail->witnesses);
          return out;
        }
        const auto& dec = std::get<SplitDecomposition>(res);
        py::dict dims, psi, bases;
        for (std::size_t a = 0; a < p.size(); ++a) {
          dims[py::str(p.name(a))] = dec.components[a].dim;
          bases[py::str(p.name(a))] = matrix_to_py(dec.components[a].base_basis);
          if (a < dec.psi.size()) psi[py::str(p.name(a))] = matrix_to_py(dec.psi[a]);
        }
        out["certified"] = dec.certified;
        out["dims"] = dims;
        out["bases"] = bases;
        out["psi"] = psi;
        return out;
      },
      "Components (C_a, C^a) and psi, or the failing (alpha, a, b).");
  m.def(
      "sum_of_components",
      [](const py::dict& poset, const py::dict& dims) {
        const FinitePoset p = poset_from_json(to_json(poset));
        std::vector<std::size_t> k(p.size());
        for (const auto& [name, d] : dims) k[p.index_of(py::str(name).cast<std::string>())] = d.cast<std::size_t>();
        const SplitFunctor sf = sum_of_components(p, k);
        const std::string text = split_to_json(sf).dump();
        return py::module_::import("json").attr("loads")(text);
      },
      py::arg("poset"), py::arg("dims"), "Split functor document of the direct sum with identity arrows.");

  m.def(
      "run",
      [](const std::string& command, const std::string& kind, const py::dict& document, const std::string& format) {
        CliRequest req;
        if (command == "check") req.command = Command::kCheck;
        else if (command == "decompose") req.command = Command::kDecompose;
        else throw py::value_error("command must be 'check' or 'decompose'");
        if (kind == "projectors") req.kind = InputKind::kProjectors;
        else if (kind == "measure") req.kind = InputKind::kMeasure;
        else if (kind == "split") req.kind = InputKind::kSplit;
        else throw py::value_error("kind must be 'projectors', 'measure' or 'split'");
        if (format == "json") req.format = OutputFormat::kJson;
        else if (format == "text") req.format = OutputFormat::kText;
        else throw py::value_error("format must be 'json' or 'text'");
        const CliResult res = run_request(req, to_json(document).dump());
        return py::make_tuple(res.exit_code, res.output);
      },
      py::arg("command"), py::arg("kind"), py::arg("document"), py::arg("format") = "json",
      "Same report as the command line tool: (exit_code, output).");
}
