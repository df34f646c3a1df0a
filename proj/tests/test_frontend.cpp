#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include "hocat/cli.hpp"
#include "hocat/dot.hpp"
#include "hocat/io.hpp"
#include "hocat/nerve.hpp"
#include "support.hpp"

using namespace hocat;
using namespace testing_support;

namespace {

template <class E>
E capture(const std::string& text) {
  try {
    parse(text);
  } catch (const E& e) {
    return e;
  }
  FAIL("expected an error");
  throw;
}

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  out = o.str();
  err = e.str();
  return code;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(HOCAT_CORPUS_DIR)) out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("frontend") {
  TEST_CASE("parse a category") {
    Document d = parse("category C\nobjects a b\narrow f : a -> b\nend\n");
    CHECK(d.kind == DocKind::Category);
    CHECK(d.name == "C");
    REQUIRE(d.body.size() == 2);
    const auto& a = std::get<ArrowStmt>(d.body[1]);
    CHECK(a.name == "f");
    CHECK(a.src == "a");
    CHECK(a.tgt == "b");
    CHECK(is_isomorphic(load_fincat(d), ordinal(1)));
  }

  TEST_CASE("relations are paths in written order") {
    Document d = parse("category C\n objects a b c\n arrow f : a -> b\n arrow g : b -> c\n arrow h : a -> c\n"
                       " relation g.f = h\nend");
    const auto& r = std::get<RelationStmt>(d.body.back());
    CHECK(r.lhs == std::vector<std::string>{"g", "f"});
    CHECK(r.rhs == std::vector<std::string>{"h"});
    CHECK(is_isomorphic(load_fincat(d), ordinal(2)));
    PresCat p = load_prescat(d);
    CHECK(p.relations[0].lhs.edges == std::vector<EdgeId>{0, 1});
  }

  TEST_CASE("errors carry locations and expectations") {
    auto u = capture<UnknownReference>("category C\nobjects a b\narrow f : a -> z\nend\n");
    CHECK(u.loc().line == 3);
    CHECK(u.loc().column == 1);
    CHECK(std::string(u.what()).find("'z'") != std::string::npos);

    auto dup = capture<DuplicateId>("category C\nobjects a b a\nend\n");
    CHECK(dup.loc().line == 2);

    auto p = capture<ParseError>("category C\nobjects a\narrow f a -> a\nend\n");
    CHECK(p.loc().line == 3);
    CHECK(p.loc().column == 9);
    CHECK(p.expected() == std::vector<std::string>{"':'"});

    auto k = capture<ParseError>("category C\n  loop e : a\nend\n");
    CHECK(k.loc().line == 2);
    CHECK(k.loc().column == 3);

    auto m = capture<ParseError>("category C\nobjects a\n");
    CHECK(m.expected() == std::vector<std::string>{"end"});

    auto s = capture<ParseError>("category C\nobjects \"a\nend\n");
    CHECK(s.loc().column == 9);

    auto e = capture<ParseError>("");
    CHECK(e.expected().size() == 5);
  }

  TEST_CASE("quoting") {
    CHECK(quote_if_needed("f") == "f");
    CHECK(quote_if_needed("g.f") == "\"g.f\"");
    CHECK(quote_if_needed("a b") == "\"a b\"");
    CHECK(quote_if_needed("") == "\"\"");
    CHECK(quote_if_needed("->") == "\"->\"");
    CHECK(quote_if_needed("say \"hi\"") == "\"say \\\"hi\\\"\"");
    Document d = parse("category \"odd name\"\nobjects \"x y\" \"q\\\"\"\nend");
    CHECK(d.name == "odd name");
    CHECK(std::get<ObjectsStmt>(d.body[0]).names[1] == "q\"");
  }

  TEST_CASE("every corpus file round trips through the printer") {
    for (const auto& f : corpus_files()) {
      INFO(f);
      Document d = read_document(f);
      Document again = parse(print(d));
      CHECK(again == d);
      CHECK(print(again) == print(d));
    }
  }

  TEST_CASE("store after load reproduces canonical documents") {
    for (const char* f : {"arrow.cat", "ord2.cat", "ord3.cat", "discrete2.cat", "parallel.cat", "idempotent.cat",
                          "iso.cat"}) {
      INFO(f);
      Document d = read_document(corpus_path(f));
      FinCat c = load_fincat(d);
      Document s = store_fincat(c, d.name);
      CHECK(is_isomorphic(load_fincat(s), c));
      CHECK(print(store_fincat(load_fincat(s), d.name)) == print(s));
    }
    for (const char* f : {"delta2.sset", "boundary2.sset", "spine2.sset", "collapsed.sset"}) {
      INFO(f);
      Document d = read_document(corpus_path(f));
      CHECK(print(store_sset(load_sset(d), d.name, true)) == print(d));
    }
    Document raw = read_document(corpus_path("interval.sset"));
    CHECK(print(store_sset(load_sset(raw), raw.name, false)) == print(raw));
    Document q = read_document(corpus_path("refl.qvr"));
    CHECK(print(store_quiver(load_quiver(q), q.name)) == print(q));
    Document m = read_document(corpus_path("arrow_marked.mcat"));
    CHECK(print(store_marked(load_marked(m), m.name)) == print(m));
    PresCat p = load_prescat(read_document(corpus_path("indiscrete3.cat")));
    Document ps = store_prescat(p, "ID3");
    CHECK(print(store_prescat(load_prescat(ps), "ID3")) == print(ps));
  }

  TEST_CASE("raw and nondegenerate forms agree") {
    TruncSSet nd = load_sset(parse(print(store_sset(standard_simplex(2, 3), "D", true))));
    TruncSSet raw = load_sset(parse(print(store_sset(standard_simplex(2, 3), "D", false))));
    for (int k = 0; k <= 3; ++k) CHECK(nd.size(k) == raw.size(k));
    TruncSSet b = load_sset(read_document(corpus_path("boundary2.sset")));
    CHECK(b.size(0) == 3);
    CHECK(b.size(1) == 6);
    CHECK(b.size(2) == 9);
  }

  TEST_CASE("module errors surface with locations") {
    // aa = b and ab = ba = bb = a violates associativity.
    std::string text =
        "category M\n objects x\n arrow a : x -> x\n arrow b : x -> x\n relation a.a = b\n relation a.b = a\n"
        " relation b.a = a\n relation b.b = a\nend\n";
    try {
      load_fincat(parse(text));
      FAIL("expected AssociativityViolation");
    } catch (const AssociativityViolation& e) {
      CHECK(std::string(e.what()).rfind("5:2: ", 0) == 0);
    }
    CHECK_THROWS_AS(load_fincat(parse("category C\n objects a b\n arrow f : a -> b\n relation f.f = f\nend")),
                    MalformedPresentation);
    CHECK_THROWS_AS(load_fincat(parse("category C\n objects a\n arrow e : a -> a\nend")), PossiblyInfinite);
    CHECK_THROWS_AS(load_sset(parse("sset X dim 1 raw\n simplex 0 p\n simplex 1 q\n faces 1 q = p p\nend")),
                    InvariantViolation);
    CHECK_THROWS_AS(load_quiver(parse("quiver Q reflexive\n vertices a\nend")), InvariantViolation);
    CHECK_THROWS_AS(load_sset(parse("sset X dim 2 nondeg\n cell 0 p\n cell 1 e : p p\n cell 1 f : s0(p) p\nend")),
                    Error);
    CHECK_THROWS_AS(parse("sset X dim 1 nondeg\n cell 1 e : p p\nend"), UnknownReference);
    CHECK_THROWS_AS(load_fincat(parse("quiver Q\n vertices a\nend")), MalformedPresentation);
  }

  TEST_CASE("diagrams load relative to their file") {
    auto dir = std::string(HOCAT_CORPUS_DIR);
    CatDiagram d = load_diagram(read_document(corpus_path("endpoints.diag")), dir);
    CHECK(d.index.num_morphisms() == 4);
    CHECK(d.objects[1].num_objects() == 2);
    CHECK_THROWS_AS(load_diagram(parse("diagram D\n index \"parallel.cat\"\n value 0 \"ord0.cat\"\nend"), dir),
                    MalformedPresentation);
    CHECK_THROWS_AS(load_diagram(parse("diagram D\n index \"nope.cat\"\nend"), dir), FileError);
  }

  TEST_CASE("parser never crashes on mutated input") {
    std::vector<std::string> seeds;
    for (const auto& f : corpus_files()) seeds.push_back(read_file(f));
    const std::string alphabet = " \n\t\":.=()#->abcs0123end";
    std::mt19937_64 rng(12345);
    int rejected = 0;
    for (int k = 0; k < 3000; ++k) {
      std::string text = seeds[rng() % seeds.size()];
      int edits = 1 + static_cast<int>(rng() % 4);
      for (int e = 0; e < edits && !text.empty(); ++e) {
        std::size_t pos = rng() % text.size();
        switch (rng() % 3) {
          case 0: text.erase(pos, 1 + rng() % 3); break;
          case 1: text.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
          default: text[pos] = static_cast<char>(rng() % 256); break;
        }
      }
      try {
        Document d = parse(text);
        CHECK(parse(print(d)) == d);
      } catch (const FrontendError& e) {
        ++rejected;
        CHECK(e.loc().line >= 1);
      }
    }
    CHECK(rejected > 0);
  }

  TEST_CASE("dot export") {
    std::string a = dot_export(ordinal(1));
    CHECK(count(a, "[label=") == 3);
    CHECK(count(a, " -> ") == 1);
    std::string i = dot_export(walking_iso());
    CHECK(count(i, " -> ") == 2);
    CHECK(count(i, "style=dashed") == 2);
    std::string s = dot_export(spine(3, 3).sset);
    CHECK(count(s, " -> ") == 3);
    CHECK(count(s, "n0 -> n1") == 1);
    CHECK(count(s, "n2 -> n3") == 1);
    CHECK(count(dot_export(ordinal(3)), " -> ") == 3);
    CHECK(count(dot_export(cyclic_group(3)), " -> ") == 1);
    MarkedCat m = make_marked(ordinal(1), {ordinal(1).hom(0, 1).front()});
    CHECK(count(dot_export(m), "penwidth=2") == 1);
    CHECK(dot_export(ordinal(2)) == dot_export(ordinal(2)));
  }

  TEST_CASE("command line") {
    std::string out, err;
    REQUIRE(run({"hcat", corpus_path("delta2.sset")}, out, err) == 0);
    CHECK(is_isomorphic(load_fincat(parse(out)), ordinal(2)));
    std::string again;
    run({"hcat", corpus_path("delta2.sset")}, again, err);
    CHECK(again == out);

    CHECK(run({"check-iep", corpus_path("boundary2.sset"), "--n", "2"}, out, err) == 1);
    CHECK(err.find("chain (01, 12) has 0 fillers") != std::string::npos);
    CHECK(run({"check-iep", corpus_path("ord3.cat"), "--dim", "4"}, out, err) == 0);

    REQUIRE(run({"localize", corpus_path("arrow.cat"), "--mark", "f"}, out, err) == 0);
    CHECK(is_isomorphic(load_fincat(parse(out)), walking_iso()));

    CHECK(run({"coeq", corpus_path("endpoints.diag")}, out, err) == 1);
    CHECK(err.find("--allow-partial") != std::string::npos);
    REQUIRE(run({"coeq", corpus_path("endpoints.diag"), "--allow-partial"}, out, err) == 0);
    CHECK(load_prescat(parse(out)).generators.num_edges() == 1);
    REQUIRE(run({"coeq", corpus_path("fold.diag")}, out, err) == 0);
    CHECK(is_isomorphic(load_fincat(parse(out)), ordinal(0)));

    REQUIRE(run({"lim", corpus_path("product.diag")}, out, err) == 0);
    CHECK(is_isomorphic(load_fincat(parse(out)), product_cat(ordinal(1), ordinal(1))));
    REQUIRE(run({"colim", corpus_path("span.diag")}, out, err) == 0);
    CHECK(is_isomorphic(load_fincat(parse(out)), ordinal(2)));

    REQUIRE(run({"nerve", corpus_path("iso.cat"), "--dim", "2"}, out, err) == 0);
    TruncSSet n = load_sset(parse(out));
    CHECK(n.size(2) == 8);
    REQUIRE(run({"elements", corpus_path("spine2.sset"), "--format", "text"}, out, err) == 0);
    CHECK(out.find("objects") != std::string::npos);
    REQUIRE(run({"export-dot", corpus_path("iso.cat")}, out, err) == 0);
    CHECK(out.rfind("digraph", 0) == 0);
    REQUIRE(run({"verify"}, out, err) == 0);
    CHECK(count(out, "holds") == 4);

    CHECK(run({}, out, err) == 2);
    CHECK(run({"frobnicate"}, out, err) == 2);
    CHECK(run({"hcat", corpus_path("missing.sset")}, out, err) == 2);
    CHECK(run({"hcat", corpus_path("delta2.sset"), "--format", "pdf"}, out, err) == 2);
    CHECK(run({"--help"}, out, err) == 0);
    CHECK(out.find("check-iep") != std::string::npos);
  }

  TEST_CASE("budget from the environment, overridden by the flag") {
    std::string out, err;
    setenv("HOCAT_BUDGET", "3", 1);
    CHECK(run({"lim", corpus_path("product.diag")}, out, err) == 1);
    CHECK(err.find("budget") != std::string::npos);
    CHECK(run({"lim", corpus_path("product.diag"), "--budget", "100000"}, out, err) == 0);
    setenv("HOCAT_BUDGET", "lots", 1);
    CHECK(run({"lim", corpus_path("product.diag")}, out, err) == 2);
    unsetenv("HOCAT_BUDGET");
  }

  TEST_CASE("output file") {
    auto path = (std::filesystem::temp_directory_path() / "hocat_cli_test.cat").string();
    std::string out, err;
    REQUIRE(run({"localize", corpus_path("ord2_marked.mcat"), "--out", path}, out, err) == 0);
    CHECK(out.empty());
    CHECK(load_fincat(read_document(path)).num_morphisms() == 7);
    std::filesystem::remove(path);
  }
}
