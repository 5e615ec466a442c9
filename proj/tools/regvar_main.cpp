// The regvar command-line tool. Every subcommand reads JSON files (or "-"
// for stdin), calls one library operation and prints JSON, DOT or text.
//
// Exit codes: 0 success or true, 1 checked false, 2 input error, 3 resource
// bound exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "regvar/io.hpp"

using namespace regvar;

namespace {

  enum Exit { ok = 0, checked_false = 1, input_error = 2, resource_error = 3 };

  struct Output {
    Json                       json;
    std::optional<std::string> text;
    std::optional<std::string> dot;
    int                        code = ok;
  };

  Json read_json(std::string const& path) {
    std::string content;
    if (path == "-") {
      content.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(path);
      if (!in) {
        throw InputError("cannot read " + path);
      }
      content.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
      return Json::parse(content);
    } catch (Json::exception const& e) {
      throw InputError(path + " is not JSON: " + e.what());
    }
  }

  Output verdict_output(Verdict const& v) {
    Output out;
    out.json = to_json(v);
    out.text = std::string(v.holds ? "true" : "false")
               + (v.witness.empty() ? "" : ": " + v.witness);
    out.code = v.holds ? ok : checked_false;
    return out;
  }

  Output dfa_output(CanonicalDfa const& l) {
    std::ostringstream text;
    text << l.digest() << " (" << l.size() << " states)";
    return {to_json(l), text.str(), to_dot(l)};
  }

  Output dfas_output(std::vector<CanonicalDfa> const& ls) {
    Output out;
    out.json = Json::array();
    std::string text;
    for (auto const& l : ls) {
      out.json.push_back(to_json(l));
      text += l.digest() + "\n";
    }
    out.text = text;
    return out;
  }

  Output monoid_output(GeneratedDMonoid const& g) {
    return {to_json(g), g.describe(), quo_dot({g})};
  }

  Output monoids_output(std::vector<GeneratedDMonoid> const& ms) {
    Output out;
    out.json = Json::array();
    std::string text;
    for (auto const& m : ms) {
      out.json.push_back(to_json(m));
      text += m.describe() + "\n";
    }
    out.text = text;
    out.dot  = quo_dot(ms);
    return out;
  }

  Output variety_output(LocalVariety const& v) {
    std::string text = std::string(to_string(v.csig())) + " variety over "
                       + std::to_string(v.alphabet().size()) + " letters, "
                       + std::to_string(v.size()) + " languages\n";
    for (auto const& l : v.languages()) {
      text += "  " + l.digest() + "\n";
    }
    return {to_json(v), text, variety_lattice_dot({v})};
  }

  std::vector<GeneratedDMonoid> read_monoids(std::vector<std::string> const& paths) {
    std::vector<GeneratedDMonoid> out;
    for (auto const& p : paths) {
      auto j = read_json(p);
      if (j.is_array()) {
        for (auto const& m : j) {
          out.push_back(monoid_from_json(m));
        }
      } else {
        out.push_back(monoid_from_json(j));
      }
    }
    return out;
  }

  // A bare monoid gets the alphabet a, b, c, ... with one letter per
  // element.
  Alphabet letters(std::size_t n) {
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= 26) {
        throw ResourceError("a bare monoid needs at most 26 elements");
      }
      symbols.emplace_back(1, static_cast<char>('a' + i));
    }
    return Alphabet(symbols);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular languages, local varieties and their dual monoids"};
  app.require_subcommand(1);
  // --format and --out may follow the subcommand.
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "json, dot or text")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write to a file instead of stdout");

  std::function<Output()> action;

  // Shared option storage.
  std::string              alphabet_spec, regex, word, csig_spec = "BA", dsig_spec = "SET";
  std::string              in, claim, morphism_path, pred;
  std::vector<std::string> ins, gens;
  std::size_t              bound = 4, states = 4, len = 3, limit = 1 << 14;

  auto alphabet = [&] { return Alphabet::parse(alphabet_spec); };
  auto csig     = [&] { return parse_csignature(csig_spec); };
  auto dsig     = [&] { return parse_dsignature(dsig_spec); };

  ////////////////////////////////////////////////////////////////////////
  // lang
  ////////////////////////////////////////////////////////////////////////

  auto* lang = app.add_subcommand("lang", "Regular languages as canonical DFAs");
  lang->require_subcommand(1);
  {
    auto* c = lang->add_subcommand("compile", "Compile a regex to its canonical DFA");
    c->add_option("--alphabet", alphabet_spec)->required();
    c->add_option("--regex", regex)->required();
    c->callback([&] { action = [&] { return dfa_output(compile(regex, alphabet())); }; });

    auto* m = lang->add_subcommand("member", "Word membership; exit 1 if not a member");
    m->add_option("--alphabet", alphabet_spec)->required();
    m->add_option("--regex", regex)->required();
    m->add_option("--word", word)->required();
    m->callback([&] {
      action = [&] {
        auto a   = alphabet();
        bool yes = compile(regex, a).contains(a.parse_word(word));
        return Output{{{"member", yes}}, yes ? "true" : "false", {}, yes ? ok : checked_false};
      };
    });

    auto* d = lang->add_subcommand("derivatives", "All two-sided derivatives");
    d->add_option("--alphabet", alphabet_spec)->required();
    d->add_option("--regex", regex)->required();
    d->callback([&] {
      action = [&] { return dfas_output(two_sided_derivatives(compile(regex, alphabet()))); };
    });

    auto* e = lang->add_subcommand("enumerate", "Every language with at most --states states");
    e->add_option("--alphabet", alphabet_spec)->required();
    e->add_option("--states", states)->capture_default_str();
    e->callback([&] {
      action = [&] { return dfas_output(enumerate_canonical_dfas(alphabet(), states)); };
    });

    auto* p = lang->add_subcommand("preimage", "Preimage along a morphism");
    p->add_option("--morphism", morphism_path)->required();
    p->add_option("--regex", regex)->required();
    p->callback([&] {
      action = [&] {
        auto f = morphism_from_json(read_json(morphism_path));
        return dfa_output(preimage(f, compile(regex, f.codomain())));
      };
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // monoid
  ////////////////////////////////////////////////////////////////////////

  auto* monoid = app.add_subcommand("monoid", "Generated finite D-monoids");
  monoid->require_subcommand(1);
  {
    auto* s = monoid->add_subcommand("syntactic", "Syntactic monoid of a regex");
    s->add_option("--alphabet", alphabet_spec)->required();
    s->add_option("--regex", regex)->required();
    s->callback([&] {
      action = [&] { return monoid_output(transition_monoid(compile(regex, alphabet()))); };
    });

    auto* e = monoid->add_subcommand("enumerate", "Every generated monoid up to --bound elements");
    e->add_option("--alphabet", alphabet_spec)->required();
    e->add_option("--dsig", dsig_spec)->capture_default_str();
    e->add_option("--bound", bound)->capture_default_str();
    e->callback([&] {
      action = [&] { return monoids_output(enumerate_generated(alphabet(), dsig(), bound)); };
    });

    auto* j = monoid->add_subcommand("join", "Subdirect product of the inputs");
    j->add_option("--in", ins)->required();
    j->callback([&] { action = [&] { return monoid_output(subdirect(read_monoids(ins))); }; });

    auto* l = monoid->add_subcommand("leq", "Whether the first input is a quotient of the second");
    l->add_option("--in", ins)->required()->expected(2);
    l->callback([&] {
      action = [&] {
        auto ms = read_monoids(ins);
        if (ms.size() != 2) {
          throw InputError("leq needs exactly two monoids");
        }
        auto w = leq_quo(ms[0], ms[1]);
        Output out = verdict_output({w.has_value(), w ? "" : "no factorization"});
        if (w) {
          out.json["map"] = w->table;
        }
        return out;
      };
    });

    auto* q = monoid->add_subcommand("quotients", "Quotients up to --bound elements");
    q->add_option("--in", in)->required();
    q->add_option("--bound", bound)->capture_default_str();
    q->callback([&] {
      action = [&] {
        return monoids_output(enumerate_quotients(monoid_from_json(read_json(in)), bound));
      };
    });

    auto* v = monoid->add_subcommand("validate", "Check the monoid laws; exit 1 on violations");
    v->add_option("--in", in)->required();
    v->callback([&] {
      action = [&] {
        auto   report = validate(finite_monoid_from_json(read_json(in), false));
        Output out;
        out.json = {{"valid", report.ok()}, {"violations", report.violations}};
        out.text = report.ok() ? "valid" : report.violations.front();
        out.code = report.ok() ? ok : checked_false;
        return out;
      };
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // variety
  ////////////////////////////////////////////////////////////////////////

  auto* variety = app.add_subcommand("variety", "Local varieties of languages");
  variety->require_subcommand(1);
  {
    auto* c = variety->add_subcommand("close", "Least local variety containing the generators");
    c->add_option("--csig", csig_spec)->capture_default_str();
    c->add_option("--alphabet", alphabet_spec)->required();
    c->add_option("--gen", gens);
    c->add_option("--limit", limit)->capture_default_str();
    c->callback([&] {
      action = [&] {
        auto                      a = alphabet();
        std::vector<CanonicalDfa> ls;
        for (auto const& g : gens) {
          ls.push_back(compile(g, a));
        }
        return variety_output(close(csig(), a, ls, limit));
      };
    });

    auto* d = variety->add_subcommand("dualize", "The dual generated monoid of a variety");
    d->add_option("--in", in)->default_val("-");
    d->callback([&] {
      action = [&] { return monoid_output(variety_to_monoid(variety_from_json(read_json(in)))); };
    });

    auto* f = variety->add_subcommand("from-monoid", "The languages a monoid recognizes");
    f->add_option("--in", in)->default_val("-");
    f->add_option("--csig", csig_spec)->capture_default_str();
    f->callback([&] {
      action = [&] { return variety_output(monoid_to_variety(monoid_from_json(read_json(in)), csig())); };
    });

    auto* a = variety->add_subcommand("algebra", "The finite algebra of a variety");
    a->add_option("--in", in)->default_val("-");
    a->callback([&] {
      action = [&] { return Output{to_json(variety_from_json(read_json(in)).algebra())}; };
    });

    auto* m = variety->add_subcommand("contains", "Membership of a regex; exit 1 if absent");
    m->add_option("--in", in)->required();
    m->add_option("--regex", regex)->required();
    m->callback([&] {
      action = [&] {
        auto v   = variety_from_json(read_json(in));
        bool yes = v.contains(compile(regex, v.alphabet()));
        return Output{{{"member", yes}}, yes ? "true" : "false", {}, yes ? ok : checked_false};
      };
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // dual
  ////////////////////////////////////////////////////////////////////////

  auto* dual = app.add_subcommand("dual", "Finite dualities through homomorphisms into 2");
  dual->require_subcommand(1);
  {
    auto* v = dual->add_subcommand("variety", "Dual object of a variety's algebra");
    v->add_option("--in", in)->default_val("-");
    v->callback([&] {
      action = [&] { return Output{to_json(dual_object(variety_from_json(read_json(in)).algebra()))}; };
    });

    std::size_t n = 2;
    auto* b = dual->add_subcommand("boolean", "Dual of the boolean algebra on --atoms atoms");
    b->add_option("--atoms", n)->capture_default_str();
    b->callback([&] { action = [&] { return Output{to_json(dual_object(FiniteCAlgebra::boolean(n)))}; }; });

    auto* s = dual->add_subcommand("space", "Dual of the Z2-space of dimension --dim");
    s->add_option("--dim", n)->capture_default_str();
    s->callback([&] { action = [&] { return Output{to_json(dual_object(FiniteCAlgebra::space(n)))}; }; });
  }

  ////////////////////////////////////////////////////////////////////////
  // fib
  ////////////////////////////////////////////////////////////////////////

  auto* fib = app.add_subcommand("fib", "Morphisms and pushforwards between fibers");
  fib->require_subcommand(1);
  {
    auto* cl = fib->add_subcommand("check-lang",
                                   "Claim {source, morphism, target} of local varieties");
    cl->add_option("--claim", claim)->required();
    cl->callback([&] {
      action = [&] {
        auto j = read_json(claim);
        return verdict_output(check_flang_morphism(variety_from_json(j.at("source")),
                                                   morphism_from_json(j.at("morphism")),
                                                   variety_from_json(j.at("target"))));
      };
    });

    auto* cv = fib->add_subcommand("check-var",
                                   "Claim {source, morphism, target} of local pseudovarieties");
    cv->add_option("--claim", claim)->required();
    cv->callback([&] {
      action = [&] {
        auto j = read_json(claim);
        return verdict_output(check_fvar_morphism(pseudovariety_from_json(j.at("source")),
                                                  morphism_from_json(j.at("morphism")),
                                                  pseudovariety_from_json(j.at("target"))));
      };
    });

    auto* pl = fib->add_subcommand(
        "push-lang", "Members with <= --states states of the pushforward of {morphism, variety}");
    pl->add_option("--claim", claim)->required();
    pl->add_option("--states", states)->capture_default_str();
    pl->callback([&] {
      action = [&] {
        auto j = read_json(claim);
        auto p = pushforward_variety(morphism_from_json(j.at("morphism")),
                                     variety_from_json(j.at("variety")));
        return dfas_output(p.enumerate(states));
      };
    });

    auto* pv = fib->add_subcommand(
        "push-var", "Members up to --bound of the pushforward of {morphism, pseudovariety}");
    pv->add_option("--claim", claim)->required();
    pv->add_option("--bound", bound)->capture_default_str();
    pv->callback([&] {
      action = [&] {
        auto j = read_json(claim);
        auto p = pushforward_pseudovariety(morphism_from_json(j.at("morphism")),
                                           pseudovariety_from_json(j.at("pseudovariety")));
        return monoids_output(p.enumerate(bound));
      };
    });

    std::size_t sq_bound = 6, sq_states = 8;
    auto*       sq = fib->add_subcommand("square", "Compare both pushforwards of {morphism, variety}");
    sq->add_option("--claim", claim)->required();
    sq->add_option("--bound", sq_bound)->capture_default_str();
    sq->add_option("--states", sq_states)->capture_default_str();
    sq->callback([&] {
      action = [&] {
        auto j = read_json(claim);
        return verdict_output(square_check(morphism_from_json(j.at("morphism")),
                                           variety_from_json(j.at("variety")), sq_bound,
                                           sq_states));
      };
    });

    auto* se = fib->add_subcommand("section",
                                   "Claim {objects, morphisms, family}: a family of local varieties");
    se->add_option("--claim", claim)->required();
    se->callback([&] {
      action = [&] {
        auto            j = read_json(claim);
        SubcategorySpec spec;
        for (auto const& a : j.at("objects")) {
          spec.objects.push_back(alphabet_from_json(a));
        }
        for (auto const& f : j.at("morphisms")) {
          spec.morphisms.push_back(morphism_from_json(f));
        }
        std::map<Alphabet, LocalVariety> family;
        for (auto const& v : j.at("family")) {
          auto lv = variety_from_json(v);
          family.emplace(lv.alphabet(), std::move(lv));
        }
        return verdict_output(section_check(spec, family));
      };
    });

    auto* fi = fib->add_subcommand("fully-invariant",
                                   "Closure under endomorphisms with payload <= --bound");
    fi->add_option("--in", in)->default_val("-");
    fi->add_option("--bound", bound)->capture_default_str();
    fi->callback([&] {
      action = [&] {
        return verdict_output(fully_invariant_check(variety_from_json(read_json(in)), bound));
      };
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // pro
  ////////////////////////////////////////////////////////////////////////

  auto* pro = app.add_subcommand("pro", "Finite approximants and truncated theories");
  pro->require_subcommand(1);
  {
    auto* li = pro->add_subcommand("limit", "Limit (subdirect join) of the input monoids");
    li->add_option("--in", ins)->required();
    li->callback([&] {
      action = [&] {
        auto m   = limit_of(read_monoids(ins));
        auto out = monoid_output(m.base);
        out.json = to_json(m);
        return out;
      };
    });

    auto* re = pro->add_subcommand("recover", "Quotients of the limit up to --bound");
    re->add_option("--in", ins)->required();
    re->add_option("--bound", bound)->capture_default_str();
    re->callback([&] {
      action = [&] {
        auto p   = recover_ideal(limit_of(read_monoids(ins)), bound);
        auto out = monoids_output(p.elements());
        out.json = to_json(p);
        return out;
      };
    });

    auto* eq = pro->add_subcommand("equations", "Kernel pairs up to payload length --len");
    eq->add_option("--in", in)->default_val("-");
    eq->add_option("--len", len)->capture_default_str();
    eq->callback([&] {
      action = [&] {
        auto        g     = monoid_from_json(read_json(in));
        auto        pairs = kernel_pairs(g, len);
        std::string text;
        for (auto const& [u, v] : pairs) {
          text += u.to_string(g.alphabet()) + " = " + v.to_string(g.alphabet()) + "\n";
        }
        return Output{kernel_pairs_to_json(pairs, g.alphabet()), text};
      };
    });

    auto add_pred = [&](CLI::App* c) {
      c->add_option("--pred", pred)->required()->check(CLI::IsMember(predicate_names()));
      c->add_option("--dsig", dsig_spec)->capture_default_str();
      c->add_option("--bound", bound)->capture_default_str();
    };

    auto* th = pro->add_subcommand("theory", "Approximant of a named predicate on --alphabet");
    add_pred(th);
    th->add_option("--alphabet", alphabet_spec)->required();
    th->callback([&] {
      action = [&] {
        auto t   = truncated_theory(named_predicate(pred, dsig()), {alphabet()}, bound);
        auto out = monoid_output(t.entries.begin()->second.base);
        out.json = to_json(t.entries.begin()->second);
        out.json["size_bound"] = bound;
        out.json["warnings"]   = t.warnings;
        return out;
      };
    });

    auto* me = pro->add_subcommand(
        "member", "Whether a monoid belongs to the predicate's truncated theory");
    add_pred(me);
    me->add_option("--in", in)->default_val("-");
    me->callback([&] {
      action = [&] {
        auto j = read_json(in);
        auto p = named_predicate(pred, dsig());
        if (j.contains("alphabet")) {
          auto g = monoid_from_json(j);
          return verdict_output(
              pseudovariety_from_theory(truncated_theory(p, {g.alphabet()}, bound), g));
        }
        auto m = finite_monoid_from_json(j);
        return verdict_output(
            pseudovariety_from_theory(truncated_theory(p, {letters(m.size())}, bound), m));
      };
    });

    auto* na = pro->add_subcommand("natural", "Naturality of the truncated theory along a morphism");
    add_pred(na);
    na->add_option("--morphism", morphism_path)->required();
    na->callback([&] {
      action = [&] {
        auto f = morphism_from_json(read_json(morphism_path));
        auto t = truncated_theory(named_predicate(pred, dsig()), {f.domain(), f.codomain()},
                                  bound);
        return verdict_output(theory_naturality_check(t, f));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    Output      out = action();
    std::string rendered;
    if (format == "json") {
      rendered = out.json.dump(2) + "\n";
    } else if (format == "dot") {
      if (!out.dot) {
        throw InputError("this command has no DOT output");
      }
      rendered = *out.dot;
    } else {
      rendered = out.text ? *out.text : out.json.dump(2);
      if (rendered.empty() || rendered.back() != '\n') {
        rendered += "\n";
      }
    }
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream file(out_path);
      if (!file) {
        throw InputError("cannot write " + out_path);
      }
      file << rendered;
    }
    return out.code;
  } catch (InputError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (UnsupportedModeError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (ResourceError const& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return resource_error;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
}
