// Python bindings. Structured values cross the boundary as JSON text in the
// library's own schemas; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regvar/io.hpp"

namespace py = pybind11;
using namespace regvar;

namespace {
  std::string dump(Json const& j) {
    return j.dump();
  }

  Json load(std::string const& text) {
    try {
      return Json::parse(text);
    } catch (Json::exception const& e) {
      throw InputError(std::string("not JSON: ") + e.what());
    }
  }

  std::vector<CanonicalDfa> compile_all(std::vector<std::string> const& regexes,
                                        Alphabet const&                 a) {
    std::vector<CanonicalDfa> out;
    for (auto const& r : regexes) {
      out.push_back(compile(r, a));
    }
    return out;
  }

  std::vector<GeneratedDMonoid> monoids(std::vector<std::string> const& texts) {
    std::vector<GeneratedDMonoid> out;
    for (auto const& t : texts) {
      out.push_back(monoid_from_json(load(t)));
    }
    return out;
  }

  py::tuple verdict(Verdict const& v) {
    return py::make_tuple(v.holds, v.witness);
  }
}  // namespace

PYBIND11_MODULE(_regvar, m) {
  m.doc() = "Regular languages, local varieties and their dual monoids";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<UnsupportedModeError>(m, "UnsupportedModeError",
                                               PyExc_RuntimeError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_AssertionError);

  m.def(
      "compile",
      [](std::string const& regex, std::string const& alphabet) {
        return dump(to_json(compile(regex, Alphabet::parse(alphabet))));
      },
      py::arg("regex"), py::arg("alphabet"), "Canonical DFA of a regex, as JSON.");

  m.def(
      "contains",
      [](std::string const& regex, std::string const& alphabet, std::string const& word) {
        auto a = Alphabet::parse(alphabet);
        return compile(regex, a).contains(a.parse_word(word));
      },
      py::arg("regex"), py::arg("alphabet"), py::arg("word"));

  m.def(
      "close",
      [](std::string const& csig, std::string const& alphabet,
         std::vector<std::string> const& regexes, std::size_t limit) {
        auto a = Alphabet::parse(alphabet);
        return dump(to_json(close(parse_csignature(csig), a, compile_all(regexes, a), limit)));
      },
      py::arg("csig"), py::arg("alphabet"), py::arg("regexes"),
      py::arg("limit") = 1 << 14, "Least local variety containing the regexes.");

  m.def(
      "variety_contains",
      [](std::string const& variety, std::string const& regex) {
        auto v = variety_from_json(load(variety));
        return v.contains(compile(regex, v.alphabet()));
      },
      py::arg("variety"), py::arg("regex"));

  m.def(
      "variety_to_monoid",
      [](std::string const& variety) {
        return dump(to_json(variety_to_monoid(variety_from_json(load(variety)))));
      },
      py::arg("variety"));

  m.def(
      "monoid_to_variety",
      [](std::string const& monoid, std::string const& csig) {
        return dump(to_json(monoid_to_variety(monoid_from_json(load(monoid)),
                                              parse_csignature(csig))));
      },
      py::arg("monoid"), py::arg("csig"));

  m.def(
      "syntactic_monoid",
      [](std::string const& regex, std::string const& alphabet) {
        return dump(to_json(transition_monoid(compile(regex, Alphabet::parse(alphabet)))));
      },
      py::arg("regex"), py::arg("alphabet"));

  m.def(
      "describe",
      [](std::string const& monoid) { return monoid_from_json(load(monoid)).describe(); },
      py::arg("monoid"));

  m.def(
      "subdirect",
      [](std::vector<std::string> const& ms) { return dump(to_json(subdirect(monoids(ms)))); },
      py::arg("monoids"));

  m.def(
      "leq_quo",
      [](std::string const& g1, std::string const& g2) {
        return leq_quo(monoid_from_json(load(g1)), monoid_from_json(load(g2))).has_value();
      },
      py::arg("smaller"), py::arg("larger"));

  m.def(
      "enumerate_generated",
      [](std::string const& alphabet, std::string const& dsig, std::size_t bound) {
        std::vector<std::string> out;
        for (auto const& g :
             enumerate_generated(Alphabet::parse(alphabet), parse_dsignature(dsig), bound)) {
          out.push_back(dump(to_json(g)));
        }
        return out;
      },
      py::arg("alphabet"), py::arg("dsig"), py::arg("bound"));

  m.def(
      "homs_into_two_count",
      [](std::string const& variety) {
        return homs_into_two(variety_from_json(load(variety)).algebra()).size();
      },
      py::arg("variety"));

  m.def(
      "check_flang_morphism",
      [](std::string const& v, std::string const& f, std::string const& w) {
        return verdict(check_flang_morphism(variety_from_json(load(v)),
                                            morphism_from_json(load(f)),
                                            variety_from_json(load(w))));
      },
      py::arg("source"), py::arg("morphism"), py::arg("target"));

  m.def(
      "square_check",
      [](std::string const& f, std::string const& v, std::size_t size_bound,
         std::size_t state_bound) {
        return verdict(square_check(morphism_from_json(load(f)), variety_from_json(load(v)),
                                    size_bound, state_bound));
      },
      py::arg("morphism"), py::arg("variety"), py::arg("size_bound") = 6,
      py::arg("state_bound") = 8);

  m.def(
      "fully_invariant_check",
      [](std::string const& v, std::size_t bound) {
        return verdict(fully_invariant_check(variety_from_json(load(v)), bound));
      },
      py::arg("variety"), py::arg("length_bound"));

  m.def(
      "limit_of",
      [](std::vector<std::string> const& ms) { return dump(to_json(limit_of(monoids(ms)))); },
      py::arg("monoids"));

  m.def(
      "recover_ideal",
      [](std::vector<std::string> const& ms, std::size_t bound) {
        std::vector<std::string> out;
        auto const               ideal = recover_ideal(limit_of(monoids(ms)), bound);
        for (auto const& q : ideal.elements()) {
          out.push_back(dump(to_json(q)));
        }
        return out;
      },
      py::arg("monoids"), py::arg("bound"));

  m.def(
      "kernel_pairs",
      [](std::string const& monoid, std::size_t length_bound) {
        auto g = monoid_from_json(load(monoid));
        return dump(kernel_pairs_to_json(kernel_pairs(g, length_bound), g.alphabet()));
      },
      py::arg("monoid"), py::arg("length_bound"));

  m.def(
      "theory_member",
      [](std::string const& pred, std::string const& monoid, std::size_t bound) {
        auto g = monoid_from_json(load(monoid));
        auto t = truncated_theory(named_predicate(pred, g.dsig()), {g.alphabet()}, bound);
        return verdict(pseudovariety_from_theory(t, g));
      },
      py::arg("predicate"), py::arg("monoid"), py::arg("bound"));

  m.def("predicate_names", &predicate_names);
}
