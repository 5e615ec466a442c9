//
// regvar - regular languages, finite D-monoids and their dualities
//

#include "regvar/io.hpp"

#include <algorithm>  // for sort
#include <sstream>    // for ostringstream

namespace regvar {

  namespace {
    // nlohmann errors become InputError so callers see one error type.
    template <typename F>
    auto guarded(char const* what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (Json::exception const& e) {
        throw InputError(std::string("malformed ") + what + ": " + e.what());
      }
    }

    template <typename T>
    Json table(std::vector<T> const& flat, std::size_t n) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
          row.push_back(flat[i * n + j]);
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    template <typename T>
    std::vector<T> flat_table(Json const& rows, std::size_t n, char const* what) {
      if (!rows.is_array() || rows.size() != n) {
        throw InputError(std::string(what) + " must have one row per element");
      }
      std::vector<T> out;
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != n) {
          throw InputError(std::string(what) + " must be square");
        }
        for (auto const& x : row) {
          out.push_back(x.get<T>());
        }
      }
      return out;
    }

    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Languages and free elements
  ////////////////////////////////////////////////////////////////////////

  Json to_json(Alphabet const& a) {
    return a.symbols();
  }

  Alphabet alphabet_from_json(Json const& j) {
    return guarded("alphabet", [&] {
      if (j.is_string()) {
        return Alphabet::parse(j.get<std::string>());
      }
      return Alphabet(j.get<std::vector<std::string>>());
    });
  }

  Json to_json(CanonicalDfa const& l) {
    std::size_t const k = l.alphabet().size();
    Json              delta = Json::array();
    Json              accepting = Json::array();
    for (std::size_t q = 0; q < l.size(); ++q) {
      Json row = Json::array();
      for (Letter a = 0; a < k; ++a) {
        row.push_back(l.next(static_cast<CanonicalDfa::State>(q), a));
      }
      delta.push_back(std::move(row));
      if (l.accepting(static_cast<CanonicalDfa::State>(q))) {
        accepting.push_back(q);
      }
    }
    return {{"alphabet", to_json(l.alphabet())},
            {"states", l.size()},
            {"initial", 0},
            {"accepting", accepting},
            {"delta", delta}};
  }

  CanonicalDfa dfa_from_json(Json const& j) {
    return guarded("automaton", [&] {
      auto              alphabet = alphabet_from_json(j.at("alphabet"));
      auto              n        = j.at("states").get<std::size_t>();
      auto              initial  = j.value("initial", 0u);
      std::vector<bool> accepting(n);
      for (auto q : j.at("accepting").get<std::vector<std::size_t>>()) {
        if (q >= n) {
          throw InputError("accepting state out of range");
        }
        accepting[q] = true;
      }
      std::vector<CanonicalDfa::State> delta;
      auto const&                      rows = j.at("delta");
      if (rows.size() != n) {
        throw InputError("delta must have one row per state");
      }
      for (auto const& row : rows) {
        if (row.size() != alphabet.size()) {
          throw InputError("delta rows must have one entry per symbol");
        }
        for (auto const& q : row) {
          delta.push_back(q.get<CanonicalDfa::State>());
        }
      }
      return CanonicalDfa::from_dfa(alphabet, n, initial, delta, accepting);
    });
  }

  Json to_json(FreeDElement const& x, Alphabet const& a) {
    if (is_word_based(x.dsig())) {
      return a.format(x.as_word());
    }
    Json out = Json::array();
    for (auto const& w : x.words()) {
      out.push_back(a.format(w));
    }
    return out;
  }

  FreeDElement free_element_from_json(Json const& j, DSignature d, Alphabet const& a) {
    return guarded("free element", [&] {
      if (is_word_based(d)) {
        return FreeDElement::word(d, a.parse_word(j.get<std::string>()));
      }
      std::vector<Word> words;
      for (auto const& w : j) {
        words.push_back(a.parse_word(w.get<std::string>()));
      }
      return FreeDElement::combination(d, std::move(words));
    });
  }

  Json to_json(FreeMorphism const& f) {
    Json images = Json::array();
    for (auto const& t : f.images()) {
      images.push_back(to_json(t, f.codomain()));
    }
    return {{"domain", to_json(f.domain())},
            {"codomain", to_json(f.codomain())},
            {"dsig", to_string(f.dsig())},
            {"images", images}};
  }

  FreeMorphism morphism_from_json(Json const& j) {
    return guarded("morphism", [&] {
      auto domain   = alphabet_from_json(j.at("domain"));
      auto codomain = alphabet_from_json(j.at("codomain"));
      auto d        = parse_dsignature(j.value("dsig", std::string("SET")));
      std::vector<FreeDElement> images;
      auto const&               imgs = j.at("images");
      if (imgs.is_object()) {
        for (auto const& s : domain.symbols()) {
          images.push_back(free_element_from_json(imgs.at(s), d, codomain));
        }
      } else {
        for (auto const& t : imgs) {
          images.push_back(free_element_from_json(t, d, codomain));
        }
      }
      return FreeMorphism(domain, codomain, d, std::move(images));
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoids
  ////////////////////////////////////////////////////////////////////////

  Json to_json(FiniteDMonoid const& m) {
    auto const& c = m.carrier();
    Json        out{{"dsig", to_string(m.dsig())},
                    {"size", m.size()},
                    {"unit", m.unit()},
                    {"mult", table(m.mult_table(), m.size())}};
    switch (m.dsig()) {
      case DSignature::set:
        break;
      case DSignature::pos:
        out["order"] = table(c.order_table(), c.size());
        break;
      case DSignature::slat:
        out["join"] = table(c.op_table(), c.size());
        out["zero"] = c.zero();
        break;
      case DSignature::z2vec:
        out["add"]  = table(c.op_table(), c.size());
        out["zero"] = c.zero();
        out["dim"]  = c.dim();
        break;
    }
    return out;
  }

  FiniteDMonoid finite_monoid_from_json(Json const& j, bool check) {
    return guarded("monoid", [&] {
      auto          d = parse_dsignature(j.at("dsig").get<std::string>());
      auto          n = j.at("size").get<std::size_t>();
      FiniteDObject carrier;
      switch (d) {
        case DSignature::set:
          carrier = FiniteDObject::set(n);
          break;
        case DSignature::pos:
          carrier = FiniteDObject::poset(
              n, flat_table<std::uint8_t>(j.at("order"), n, "order"));
          break;
        case DSignature::slat:
          carrier = FiniteDObject::semilattice(
              n, flat_table<Elem>(j.at("join"), n, "join"), j.at("zero").get<Elem>());
          break;
        case DSignature::z2vec:
          carrier = FiniteDObject::space(
              n, flat_table<Elem>(j.at("add"), n, "add"), j.at("zero").get<Elem>());
          break;
      }
      FiniteDMonoid m(carrier, j.at("unit").get<Elem>(),
                      flat_table<Elem>(j.at("mult"), n, "mult"));
      auto report = check ? validate(m) : ValidityReport{};
      if (!report.ok()) {
        throw InputError("invalid monoid: " + report.violations.front());
      }
      return m;
    });
  }

  Json to_json(GeneratedDMonoid const& g) {
    Json out  = to_json(g.monoid());
    Json gens = Json::object();
    for (Letter a = 0; a < g.alphabet().size(); ++a) {
      gens[g.alphabet().symbol(a)] = g.gen(a);
    }
    Json labels = Json::array();
    for (auto const& t : g.labels()) {
      labels.push_back(to_json(t, g.alphabet()));
    }
    out["alphabet"] = to_json(g.alphabet());
    out["gens"]     = gens;
    out["labels"]   = labels;
    return out;
  }

  GeneratedDMonoid monoid_from_json(Json const& j) {
    return guarded("generated monoid", [&] {
      auto              m        = finite_monoid_from_json(j);
      auto              alphabet = alphabet_from_json(j.at("alphabet"));
      std::vector<Elem> gens;
      auto const&       g = j.at("gens");
      for (auto const& s : alphabet.symbols()) {
        gens.push_back(g.is_object() ? g.at(s).get<Elem>()
                                     : g.at(gens.size()).get<Elem>());
      }
      return GeneratedDMonoid(std::move(m), std::move(alphabet), std::move(gens));
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Varieties, algebras and duals
  ////////////////////////////////////////////////////////////////////////

  Json to_json(LocalVariety const& v) {
    Json languages = Json::array();
    for (auto const& l : v.languages()) {
      languages.push_back(to_json(l));
    }
    return {{"csig", to_string(v.csig())},
            {"alphabet", to_json(v.alphabet())},
            {"languages", languages}};
  }

  LocalVariety variety_from_json(Json const& j) {
    return guarded("local variety", [&] {
      auto                      csig     = parse_csignature(j.at("csig").get<std::string>());
      auto                      alphabet = alphabet_from_json(j.at("alphabet"));
      std::vector<CanonicalDfa> languages;
      for (auto const& l : j.at("languages")) {
        languages.push_back(dfa_from_json(l));
      }
      std::sort(languages.begin(), languages.end());
      languages.erase(std::unique(languages.begin(), languages.end()), languages.end());
      return LocalVariety(csig, alphabet, std::move(languages));
    });
  }

  Json to_json(FiniteCAlgebra const& a) {
    return {{"csig", to_string(a.csig())},
            {"size", a.size()},
            {"plus", table(a.plus_table(), a.size())},
            {"meet", a.meet_table().empty() ? Json() : table(a.meet_table(), a.size())},
            {"complement", a.complement_table()},
            {"zero", a.zero()},
            {"one", a.one()}};
  }

  Json to_json(DualObject const& d) {
    Json elements = Json::array();
    for (std::size_t x = 0; x < d.homs.size(); ++x) {
      std::string bits;
      for (auto b : d.homs[x]) {
        bits += b ? '1' : '0';
      }
      elements.push_back({{"element", x}, {"hom", bits}});
    }
    Json out{{"dsig", to_string(d.object.dsig())},
             {"size", d.object.size()},
             {"elements", elements}};
    if (d.object.dsig() == DSignature::pos) {
      out["order"] = table(d.object.order_table(), d.object.size());
    } else if (!d.object.op_table().empty()) {
      out["op"]   = table(d.object.op_table(), d.object.size());
      out["zero"] = d.object.zero();
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fibers and approximants
  ////////////////////////////////////////////////////////////////////////

  Json to_json(LocalPseudovariety const& p) {
    if (p.mode() == PseudovarietyMode::oracle) {
      throw UnsupportedModeError("an ORACLE pseudovariety has no JSON form");
    }
    Json elements = Json::array();
    for (auto const& m : p.elements()) {
      elements.push_back(to_json(m));
    }
    return {{"mode", to_string(p.mode())},
            {"alphabet", to_json(p.alphabet())},
            {"dsig", to_string(p.dsig())},
            {"elements", elements}};
  }

  LocalPseudovariety pseudovariety_from_json(Json const& j) {
    return guarded("pseudovariety", [&] {
      auto alphabet = alphabet_from_json(j.at("alphabet"));
      auto d        = parse_dsignature(j.at("dsig").get<std::string>());
      std::vector<GeneratedDMonoid> ms;
      for (auto const& m : j.at("elements")) {
        ms.push_back(monoid_from_json(m));
      }
      auto mode = j.value("mode", std::string("GENERATED"));
      if (mode == "GENERATED") {
        return LocalPseudovariety::generated(alphabet, d, std::move(ms));
      }
      if (mode == "FINITE") {
        return LocalPseudovariety::finite(alphabet, d, std::move(ms));
      }
      throw InputError("mode must be FINITE or GENERATED, found " + mode);
    });
  }

  Json to_json(Verdict const& v) {
    return {{"holds", v.holds}, {"witness", v.witness}};
  }

  Json to_json(ApproximantMonoid const& m) {
    Json provenance = Json::array();
    for (auto const& g : m.provenance) {
      provenance.push_back(to_json(g));
    }
    Json projections = Json::array();
    for (auto const& p : m.projections) {
      projections.push_back(p.table);
    }
    return {{"base", to_json(m.base)},
            {"provenance", provenance},
            {"projections", projections}};
  }

  Json kernel_pairs_to_json(
      std::vector<std::pair<FreeDElement, FreeDElement>> const& pairs,
      Alphabet const&                                            a) {
    Json out = Json::array();
    for (auto const& [u, v] : pairs) {
      out.push_back({to_json(u, a), to_json(v, a)});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Covering pairs (lo, hi) of a partial order given by leq.
    template <typename Leq>
    std::vector<std::pair<std::size_t, std::size_t>> covers(std::size_t n, Leq leq) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (x == y || !leq(x, y)) {
            continue;
          }
          bool covering = true;
          for (std::size_t z = 0; z < n && covering; ++z) {
            covering = z == x || z == y || !(leq(x, z) && leq(z, y));
          }
          if (covering) {
            out.emplace_back(x, y);
          }
        }
      }
      return out;
    }

    std::string hasse(std::string const&                                      name,
                      std::vector<std::string> const&                         labels,
                      std::vector<std::pair<std::size_t, std::size_t>> const& edges) {
      std::ostringstream out;
      out << "digraph " << name << " {\n  rankdir=BT;\n";
      for (std::size_t x = 0; x < labels.size(); ++x) {
        out << "  n" << x << " [label=" << quoted(labels[x]) << "];\n";
      }
      for (auto [x, y] : edges) {
        out << "  n" << x << " -> n" << y << ";\n";
      }
      out << "}\n";
      return out.str();
    }
  }  // namespace

  std::string quo_dot(std::vector<GeneratedDMonoid> const& ms) {
    // The canonical table tells apart monoids with the same labels.
    std::vector<std::string> labels;
    for (auto const& m : ms) {
      std::string s = m.describe() + " mult";
      for (std::size_t x = 0; x < m.size(); ++x) {
        s += x == 0 ? " " : "|";
        for (std::size_t y = 0; y < m.size(); ++y) {
          s += std::to_string(m.monoid().mult(static_cast<Elem>(x), static_cast<Elem>(y)));
          s += y + 1 < m.size() && m.size() > 10 ? "," : "";
        }
      }
      labels.push_back(s);
    }
    return hasse("quo", labels, covers(ms.size(), [&](std::size_t x, std::size_t y) {
                   return leq_quo(ms[x], ms[y]).has_value();
                 }));
  }

  std::string variety_lattice_dot(std::vector<LocalVariety> const& vs) {
    std::vector<std::string> labels;
    for (auto const& v : vs) {
      std::string s = std::to_string(v.size()) + " languages:";
      for (auto const& l : v.languages()) {
        s += " " + l.digest();
      }
      labels.push_back(s);
    }
    return hasse("varieties", labels,
                 covers(vs.size(), [&](std::size_t x, std::size_t y) {
                   return vs[x].subset_of(vs[y]);
                 }));
  }

  std::string to_dot(CanonicalDfa const& l) {
    std::ostringstream out;
    out << "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n";
    for (std::size_t q = 0; q < l.size(); ++q) {
      out << "  q" << q << " [shape="
          << (l.accepting(static_cast<CanonicalDfa::State>(q)) ? "doublecircle"
                                                               : "circle")
          << "];\n";
    }
    out << "  start -> q0;\n";
    for (std::size_t q = 0; q < l.size(); ++q) {
      for (Letter a = 0; a < l.alphabet().size(); ++a) {
        out << "  q" << q << " -> q" << l.next(static_cast<CanonicalDfa::State>(q), a)
            << " [label=" << quoted(l.alphabet().symbol(a)) << "];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace regvar
