// Python bindings: thin functions over plain python data (ints, lists),
// returning dicts mirroring the CLI's JSON output.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "katospec/enumerate.hpp"
#include "katospec/exponential.hpp"
#include "katospec/json_io.hpp"
#include "katospec/ring.hpp"
#include "katospec/theorems.hpp"

namespace py = pybind11;
using namespace katospec;

namespace {

py::object to_py(const ordered_json& j) {
  switch (j.type()) {
    case ordered_json::value_t::null:
      return py::none();
    case ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case ordered_json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case ordered_json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    case ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case ordered_json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_py(item));
      return out;
    }
    case ordered_json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

std::vector<int> flatten_table(const std::vector<std::vector<int>>& rows) {
  std::vector<int> flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

FiniteSpace space_from(int size, const std::vector<std::vector<int>>& opens) {
  std::vector<Mask> generators;
  for (const auto& members : opens) generators.push_back(mask_from_members(members, size));
  return from_open_family(size, std::move(generators));
}

BasedSpace based_from(int size, const std::vector<std::vector<int>>& base) {
  std::vector<Mask> members;
  for (const auto& pts : base) members.push_back(mask_from_members(pts, size));
  auto space = from_open_family(size, members);
  return make_based_space(std::move(space), std::move(members));
}

}  // namespace

PYBIND11_MODULE(katospec, m) {
  m.doc() = "spectra of finite commutative monoids and their topology";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      std::string msg = std::string(error_code_name(e.code)) + ": " + e.what();
      PyErr_SetString(PyExc_ValueError, msg.c_str());
    }
  });

  m.def(
      "spec",
      [](int order, int unit, const std::vector<std::vector<int>>& table) {
        auto mo = validate_monoid(order, unit, flatten_table(table));
        return to_py(json_of(spec(mo)));
      },
      py::arg("order"), py::arg("unit"), py::arg("table"),
      "prime spectrum of a commutative monoid given as a Cayley table");

  m.def(
      "exponential",
      [](int size, const std::vector<std::vector<int>>& base) {
        return to_py(json_of(exponential(based_from(size, base))));
      },
      py::arg("size"), py::arg("base"),
      "exponential completion of the space generated and based by the given family");

  m.def(
      "check",
      [](int size, const std::vector<std::vector<int>>& opens) {
        auto x = space_from(size, opens);
        auto brenner = brenner_report(x);
        ordered_json out;
        out["brenner"] = json_of(brenner);
        out["hochster"] = json_of(hochster_report(x));
        if (brenner.t0 && x.size <= 4)
          out["expchar"] = json_of(exp_characterization_report(x));
        else
          out["expchar"] = nullptr;
        out["verdict"] = brenner.verdict();
        return to_py(out);
      },
      py::arg("size"), py::arg("opens"), "condition reports for the generated space");

  m.def(
      "realize",
      [](int size, const std::vector<std::vector<int>>& opens) {
        return to_py(json_of(classify(space_from(size, opens))));
      },
      py::arg("size"), py::arg("opens"),
      "decide whether the generated space is a monoid spectrum, with witness");

  m.def(
      "soberify",
      [](int size, const std::vector<std::pair<int, int>>& le) {
        auto result = soberify(make_poset(size, le));
        return to_py(json_of(result));
      },
      py::arg("size"), py::arg("le"),
      "soberification of the down-set space of a meet-semilattice with top");

  m.def(
      "ring_spec",
      [](const std::vector<int>& factors) {
        auto r = make_ring(factors);
        ordered_json out;
        out["size"] = r.size;
        out["primes"] = ordered_json::array();
        for (const auto& p : ring_spec(r)) out["primes"].push_back(json_of(p));
        out["unions_of_primes"] = check_unions_of_primes(r);
        out["exp_example"] = check_exp_example(r);
        return to_py(out);
      },
      py::arg("factors"), "prime spectrum and bridge checks for a product of Z/n factors");

  m.def(
      "enumerate_monoids",
      [](int order) {
        py::list out;
        for (const auto& mo : enumerate_monoids(order)) out.append(to_py(json_of(mo)));
        return out;
      },
      py::arg("order"), "commutative monoids of the order, one per isomorphism class");

  m.def(
      "enumerate_posets",
      [](int size) {
        py::list out;
        for (const auto& p : enumerate_posets(size)) out.append(to_py(json_of(p)));
        return out;
      },
      py::arg("size"), "posets on the given number of points, one per isomorphism class");

  m.def(
      "suite",
      [](int max_order, int max_size, std::uint64_t seed) {
        return to_py(json_of(run_suite(max_order, max_size, seed)));
      },
      py::arg("max_order") = 5, py::arg("max_size") = 5, py::arg("seed") = 0,
      "full verification sweep; deterministic for fixed arguments");
}
