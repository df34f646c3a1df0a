#include "hocat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hocat/adjoints.hpp"
#include "hocat/dot.hpp"
#include "hocat/elements.hpp"
#include "hocat/io.hpp"
#include "hocat/nerve.hpp"
#include "hocat/words.hpp"

namespace hocat {

namespace {

struct Options {
  std::string file;
  int dim = 3;
  std::size_t max_len = 0;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "doc";
  std::optional<int> n;
  std::vector<std::string> mark;
  bool allow_partial = false;
  bool nondeg = false;
};

/// Thrown for bad invocations detected after option parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t resolve_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("HOCAT_BUDGET")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("HOCAT_BUDGET is not a positive integer: '") + env + "'");
    }
  }
  return kDefaultBudget;
}

std::string render_category(const FinCat& c, const std::string& name, const Options& o) {
  if (o.format == "dot") return dot_export(c, name);
  if (o.format == "text") {
    std::ostringstream s;
    s << "category " << name << ": " << c.num_objects() << " objects, " << c.num_morphisms() << " morphisms\n";
    for (MorId m = 0; m < c.num_morphisms(); ++m)
      s << "  " << c.morphism(m).name << " : " << c.object_name(c.src(m)) << " -> " << c.object_name(c.tgt(m))
        << (c.is_identity(m) ? " (identity)" : "") << "\n";
    return s.str();
  }
  return print(store_fincat(c, name));
}

std::string render_table(const MaterializeResult& t, const PresCat& p, const std::string& name, const Options& o) {
  if (t.finite()) return render_category(*t.category, name, o);
  if (!o.allow_partial)
    throw PossiblyInfinite("'" + name + "' could not be certified finite up to word length " +
                           std::to_string(t.max_len) + "; --allow-partial prints the presentation");
  if (o.format == "dot") return dot_export(p.generators, name);
  if (o.format == "text") {
    std::ostringstream s;
    s << "presentation " << name << " (not certified finite): " << p.generators.num_vertices() << " objects, "
      << p.generators.num_edges() << " generators, " << p.relations.size() << " relations, " << t.classes.size()
      << " word classes up to length " << t.max_len << "\n";
    return s.str();
  }
  return print(store_prescat(p, name));
}

std::string render_sset(const TruncSSet& x, const std::string& name, const Options& o) {
  if (o.format == "dot") return dot_export(x, name);
  if (o.format == "text") {
    std::ostringstream s;
    s << "sset " << name << " dim " << x.dim() << ": level sizes";
    for (int n = 0; n <= x.dim(); ++n) s << " " << x.size(n);
    s << "\n";
    return s.str();
  }
  return print(store_sset(x, name, o.nondeg));
}

std::optional<MorId> find_ref(const FinCat& c, const std::string& n) {
  if (auto m = c.find_morphism(n)) return m;
  if (n.rfind("id_", 0) == 0)
    if (auto x = c.find_object(n.substr(3))) return c.identity(*x);
  return std::nullopt;
}

TruncSSet sset_or_nerve(const Document& doc, const Options& o, std::size_t budget) {
  if (doc.kind == DocKind::SSet) return load_sset(doc);
  if (doc.kind == DocKind::Category) return nerve(load_fincat(doc, budget), o.dim).sset;
  throw UsageError("expected a sset or category document, got " + to_string(doc.kind));
}

std::string run(const std::string& cmd, const Options& o, int& status) {
  const std::size_t budget = resolve_budget(o);
  if (o.dim < 0 || o.dim > 8) throw UsageError("--dim must lie in 0..8");
  if (cmd == "verify") {
    std::ostringstream s;
    for (const auto& r : verify_set_cat_adjunctions(budget)) {
      s << r.name << ": " << (r.holds ? "holds" : "FAILS") << " (" << r.pairs << " probe pairs)\n";
      for (const auto& f : r.failures) s << "  " << f << "\n";
      if (!r.holds) status = kExitDomain;
    }
    return s.str();
  }
  const Document doc = read_document(o.file);
  const std::string name = doc.name;
  if (cmd == "nerve") {
    if (doc.kind != DocKind::Category) throw UsageError("nerve expects a category document");
    return render_sset(nerve(load_fincat(doc, budget), o.dim).sset, "N(" + name + ")", o);
  }
  if (cmd == "hcat") {
    TruncSSet x = sset_or_nerve(doc, o, budget);
    PresCat p = hcat(x);
    return render_table(materialize(p, o.max_len, budget), p, "h(" + name + ")", o);
  }
  if (cmd == "colim" || cmd == "lim" || cmd == "coeq") {
    if (doc.kind != DocKind::Diagram) throw UsageError(cmd + " expects a diagram document");
    const std::string dir = std::filesystem::path(o.file).parent_path().string();
    CatDiagram d = load_diagram(doc, dir.empty() ? "." : dir, budget);
    if (cmd == "colim") {
      ColimResult r = colim_cat(d, o.max_len, budget);
      return render_table(r.table, r.presentation, "colim(" + name + ")", o);
    }
    if (cmd == "lim") return render_category(lim_cat(d, budget).category, "lim(" + name + ")", o);
    std::vector<MorId> arrows;
    for (MorId m = 0; m < d.index.num_morphisms(); ++m)
      if (!d.index.is_identity(m)) arrows.push_back(m);
    if (d.index.num_objects() != 2 || arrows.size() != 2 || d.index.src(arrows[0]) != d.index.src(arrows[1]) ||
        d.index.tgt(arrows[0]) != d.index.tgt(arrows[1]) || d.index.src(arrows[0]) == d.index.tgt(arrows[0]))
      throw MalformedPresentation("coeq expects a diagram indexed by a parallel pair");
    const ObjId a = d.index.src(arrows[0]), b = d.index.tgt(arrows[0]);
    CoequalizerResult r = coeq_cat_direct(d.objects[a], d.objects[b], d.arrows[arrows[0]], d.arrows[arrows[1]]);
    return render_table(materialize(r.presentation, o.max_len, budget), r.presentation, "coeq(" + name + ")", o);
  }
  if (cmd == "localize") {
    MarkedCat m;
    bool total = false;
    if (doc.kind == DocKind::Marked) {
      m = load_marked(doc, budget);
    } else if (doc.kind == DocKind::Category) {
      m = make_marked(load_fincat(doc, budget), {});
      total = o.mark.empty();
    } else {
      throw UsageError("localize expects a category or marked document");
    }
    std::vector<MorId> marking = m.marking;
    for (const auto& n : o.mark) {
      auto f = find_ref(m.cat, n);
      if (!f) throw UsageError("--mark: unknown morphism '" + n + "'");
      marking.push_back(*f);
    }
    Localization loc = total ? localize_total(m.cat, o.max_len, budget)
                             : localize_rel(make_marked(m.cat, marking), o.max_len, budget);
    return render_table(loc.table, loc.presentation, "L(" + name + ")", o);
  }
  if (cmd == "elements") {
    if (doc.kind != DocKind::SSet) throw UsageError("elements expects a sset document");
    return render_category(elements(as_presheaf(load_sset(doc))).cat, "el(" + name + ")", o);
  }
  if (cmd == "check-iep") {
    TruncSSet x = sset_or_nerve(doc, o, budget);
    int lo = 2, hi = x.dim();
    if (o.n) lo = hi = *o.n;
    if (lo < 1 || hi > x.dim()) throw UsageError("--n must lie in 1.." + std::to_string(x.dim()));
    std::ostringstream s;
    for (int n = lo; n <= hi; ++n) {
      IEPResult r = check_iep(x, n);
      if (!r.holds) throw NotIEP("'" + name + "' fails the spine extension property at level " + std::to_string(n) +
                                 ": " + r.witness());
      s << "level " << n << ": every spine extends uniquely\n";
    }
    return s.str();
  }
  if (cmd == "export-dot") {
    switch (doc.kind) {
      case DocKind::Category: return dot_export(load_fincat(doc, budget), name);
      case DocKind::Marked: return dot_export(load_marked(doc, budget), name);
      case DocKind::SSet: return dot_export(load_sset(doc), name);
      case DocKind::Quiver: return dot_export(load_quiver(doc), name);
      case DocKind::Diagram: throw UsageError("export-dot does not draw diagram documents");
    }
  }
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite categories, simplicial sets and their comparison"};
  app.name("hocat");
  app.require_subcommand(1);
  Options o;
  auto add = [&](const std::string& cmd, const std::string& help, bool file, std::vector<std::string> flags) {
    CLI::App* sub = app.add_subcommand(cmd, help);
    if (file) sub->add_option("file", o.file, "input document")->required();
    auto has = [&](const char* f) { return std::find(flags.begin(), flags.end(), f) != flags.end(); };
    sub->add_option("--budget", o.budget, "enumeration ceiling (overrides HOCAT_BUDGET)")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--out", o.out, "write output to a file");
    if (has("dim")) sub->add_option("--dim", o.dim, "truncation dimension")->capture_default_str();
    if (has("max-len")) sub->add_option("--max-len", o.max_len, "word-length bound for materialization");
    if (has("format"))
      sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "dot", "doc"}));
    if (has("partial")) sub->add_flag("--allow-partial", o.allow_partial, "print presentations not certified finite");
    if (has("n")) sub->add_option("--n", o.n, "level to check");
    if (has("mark")) sub->add_option("--mark", o.mark, "morphisms to invert");
    if (has("nondeg")) sub->add_flag("--nondeg", o.nondeg, "write simplicial sets in nondegenerate form");
  };
  add("nerve", "nerve of a category", true, {"dim", "format", "nondeg"});
  add("hcat", "homotopy category of a simplicial set", true, {"dim", "max-len", "format", "partial"});
  add("colim", "colimit of a diagram of categories", true, {"max-len", "format", "partial"});
  add("lim", "limit of a diagram of categories", true, {"format"});
  add("coeq", "coequalizer of a parallel pair of functors", true, {"max-len", "format", "partial"});
  add("localize", "invert the marked (or all) morphisms", true, {"max-len", "format", "partial", "mark"});
  add("elements", "category of simplices of a simplicial set", true, {"format"});
  add("check-iep", "spine extension property", true, {"dim", "n"});
  add("verify", "adjunction suites between sets, categories and quivers", false, {});
  add("export-dot", "DOT drawing of a document", true, {});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    int status = kExitOk;
    std::string text = run(cmd, o, status);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + o.out + "'");
      f << text;
    }
    return status;
  } catch (const FrontendError& e) {
    err << o.file << ":" << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FileError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace hocat
