#include "qsym/checks.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qsym/errors.hpp"
#include "qsym/hopf.hpp"
#include "qsym/incseq.hpp"
#include "qsym/present.hpp"
#include "qsym/twist.hpp"
#include "qsym/twistcalc.hpp"

namespace qsym {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

void CheckContext::expect(bool ok, const std::string& what) {
  if (!ok) failures_.push_back(what);
}

void CheckContext::note(const std::string& line) { notes_.push_back(line); }

namespace {

using Ctx = CheckContext;

const PermGroup& s4() {
  static const PermGroup g = PermGroup::symmetric(4);
  return g;
}

std::int64_t factorial(std::int64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::string join_cycles(const std::vector<Permutation>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : " ") + p.to_cycle_string();
  return out;
}

std::string join_matrices(const std::vector<IntMatrix>& ms) {
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : " ") + m.to_string();
  return out;
}

PermGroup diagonal_klein() {
  return generate(4, std::vector<Permutation>{Permutation::from_cycles(4, "(12)(34)"),
                                              Permutation::from_cycles(4, "(13)(24)")});
}

// --- increasing sequences ---------------------------------------------------

void incseq_oracle(Ctx& c) {
  const auto max_n = static_cast<std::size_t>(c.config().max_n);
  std::int64_t checked = 0;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& s : all_sequences(k, n)) {
        ++checked;
        if (complete_formula(s) != complete_diagram(s))
          c.expect(false, "formula and diagram differ at n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
      }
  c.metric("max_n", static_cast<std::int64_t>(max_n));
  c.metric("sequences_checked", checked);
}

void incseq_generation(Ctx& c) {
  const auto max_n = static_cast<std::size_t>(c.config().max_n);
  std::int64_t cases = 0;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto order = generated_completion_group(k, n, kMaxNCap).order();
      const bool edge = k == 0 || k == n;
      const auto expected = edge ? 1 : factorial(static_cast<std::int64_t>(n));
      c.expect(static_cast<std::int64_t>(order) == expected,
               "|<I_{" + std::to_string(k) + "," + std::to_string(n) + "}>| = " +
                   std::to_string(order));
      ++cases;
    }
  c.metric("max_n", static_cast<std::int64_t>(max_n));
  c.metric("cases", cases);
  const PermGroup g24 = generated_completion_group(2, 4);
  c.metric("i24_group_order", static_cast<std::int64_t>(g24.order()));
  c.expect(g24 == s4(), "the completions of I_{2,4} do not generate S4");
}

// --- Hopf algebras and twists -------------------------------------------------

void hopf_axioms(Ctx& c) {
  const FDHopf fs4 = function_algebra(s4());
  const FDHopf gs4 = group_algebra(s4());
  const FDHopf tau = s4tau();
  std::int64_t passed = 0;
  for (const auto& [name, h] :
       std::vector<std::pair<std::string, const FDHopf*>>{{"C(S4)", &fs4}, {"Q[S4]", &gs4}, {"s4tau", &tau}}) {
    HopfAxiomReport r = verify_hopf_axioms(*h);
    c.expect(r.all(), name + " fails: " + (r.failures.empty() ? "" : r.failures.front()));
    passed += r.all();
  }
  c.metric("algebras_passing", passed);
  c.metric("suites", 6);
  c.expect(!tau.is_commutative(), "s4tau is commutative");
}

void cocycle_valid(Ctx& c) {
  const FDHopf k = elementary_abelian_group_algebra(2);
  CocycleReport kr = check_cocycle(k, klein_bicharacter());
  c.expect(kr.valid(), "Klein bicharacter: " + kr.failure);
  const InducedCocycle ic = induced_klein_cocycle(s4(), s4tau_klein(), s4tau_basis());
  CocycleReport sr = check_cocycle(ic.algebra, ic.cocycle);
  c.expect(sr.valid(), "induced cocycle: " + sr.failure);
  c.expect(ic.cocycle.table == ic.cocycle.inverse_table, "induced cocycle is not self-inverse");
  std::int64_t support = 0;
  for (const auto& v : ic.cocycle.table) support += sgn(v) != 0;
  c.metric("induced_support", support);
  c.metric("cocycle_dim", static_cast<std::int64_t>(ic.cocycle.dim));
}

void s4tau_characters(Ctx& c) {
  const FDHopf tau = s4tau();
  const auto pair = tau.noncommuting_pair();
  c.expect(pair.has_value(), "no noncommuting pair");
  if (pair) {
    c.label("noncommuting_left", tau.labels[pair->first]);
    c.label("noncommuting_right", tau.labels[pair->second]);
  }
  const CharacterGroup g = character_group(tau);
  c.metric("count", static_cast<std::int64_t>(g.elements.size()));
  c.label("group_type", g.type ? g.type->name() : "unknown");
  c.expect(g.elements.size() == 8, "expected 8 characters");
  c.expect(g.type && g.type->tag == GroupType::Tag::D4, "character group is not D4");
  std::vector<Permutation> perms;
  for (const auto& chi : g.elements) perms.push_back(character_permutation(s4(), chi));
  std::sort(perms.begin(), perms.end());
  c.note("characters as permutations: " + join_cycles(perms));
}

void double_twist(Ctx& c) {
  const FDHopf fs4 = function_algebra(s4());
  const InducedCocycle ic = induced_klein_cocycle(s4(), s4tau_klein(), s4tau_basis());
  const FDHopf once = twist(fs4, ic.cocycle);
  const FDHopf twice = twist(once, ic.cocycle);
  c.expect(!once.same_structure(fs4), "single twist left C(S4) unchanged");
  c.expect(twice.same_structure(fs4), "double twist differs from C(S4)");
  c.metric("dim", static_cast<std::int64_t>(twice.dim));
}

// --- subgroups ----------------------------------------------------------------

void klein_classification(Ctx& c) {
  const auto kleins = subgroups_of_type(s4(), GroupType::of(GroupType::Tag::Klein));
  std::int64_t characteristic = 0;
  for (const auto& v : kleins)
    if (is_characteristic_under_inner(s4(), v)) {
      ++characteristic;
      c.expect(v == diagonal_klein(), "a non-diagonal Klein subgroup is normal");
    }
  c.metric("klein_subgroups", static_cast<std::int64_t>(kleins.size()));
  c.metric("characteristic", characteristic);
  c.expect(kleins.size() == 4, "expected 4 Klein subgroups");
  c.expect(characteristic == 1, "expected exactly one characteristic Klein subgroup");
}

void d4_classification(Ctx& c) {
  const auto d4s = subgroups_of_type(s4(), GroupType::of(GroupType::Tag::D4));
  const PermGroup diag = diagonal_klein();
  c.metric("d4_subgroups", static_cast<std::int64_t>(d4s.size()));
  c.expect(d4s.size() == 3, "expected 3 D4 subgroups");
  std::int64_t containing = 0, conjugate_pairs = 0;
  for (std::size_t a = 0; a < d4s.size(); ++a) {
    containing += diag.is_subgroup_of(d4s[a]);
    for (std::size_t b = a + 1; b < d4s.size(); ++b)
      conjugate_pairs += are_conjugate(s4(), d4s[a], d4s[b]).has_value();
  }
  c.metric("containing_diagonal_klein", containing);
  c.metric("conjugate_pairs", conjugate_pairs);
  c.expect(containing == static_cast<std::int64_t>(d4s.size()), "a D4 misses the diagonal Klein");
  c.expect(conjugate_pairs == 3, "the D4 subgroups are not pairwise conjugate");
}

// --- presentations ------------------------------------------------------------

void characters_of(Ctx& c, const PresentationSpec& p, std::size_t count, GroupType::Tag tag) {
  const PresentedCharacterGroup g = character_group_of(p);
  c.metric("count", static_cast<std::int64_t>(g.elements.size()));
  c.label("group_type", g.type ? g.type->name() : "unknown");
  c.expect(g.elements.size() == count, "expected " + std::to_string(count) + " characters");
  c.expect(g.type && g.type->tag == tag, "unexpected character group type");
  c.note("characters: " + join_matrices(g.elements));
}

void characters_o2minus(Ctx& c) {
  characters_of(c, PresentationSpec::o2minus(), 8, GroupType::Tag::D4);
}

void characters_so3minus(Ctx& c) {
  characters_of(c, PresentationSpec::so3minus(), 24, GroupType::Tag::S4);
}

void characters_snplus(Ctx& c) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto count = solve_characters(PresentationSpec::snplus(n)).size();
    c.metric("count_n" + std::to_string(n), static_cast<std::int64_t>(count));
    c.expect(static_cast<std::int64_t>(count) == factorial(static_cast<std::int64_t>(n)),
             "S_" + std::to_string(n) + "^+ has " + std::to_string(count) + " characters");
  }
  const auto inc = solve_characters(PresentationSpec::incseq(2, 4)).size();
  c.metric("incseq_2_4", static_cast<std::int64_t>(inc));
  c.expect(inc == 6, "I_{2,4}^+ has " + std::to_string(inc) + " characters");
}

void sign_table(Ctx& c) {
  const SignTable t = relation_sign_table(klein_bicharacter());
  c.metric("entries", static_cast<std::int64_t>(t.entries.size()));
  c.metric("negative", static_cast<std::int64_t>(t.negative_count()));
  c.expect(t.entries.size() == 81, "table does not have 81 entries");
}

void det_to_perm(Ctx& c) {
  std::int64_t checked = 0;
  for (std::size_t size : {2u, 3u})
    for (const auto& p : determinant_to_permanent_signs(size, klein_bicharacter())) {
      c.expect(p.combined == 1, "combined sign -1 at " + p.tau.to_cycle_string());
      ++checked;
    }
  c.metric("permutations_checked", checked);
}

void twisted_presentation(Ctx& c) {
  const RelationReport o2 = verify_twisted_presentation(TwistedKind::O2Minus);
  const RelationReport so3 = verify_twisted_presentation(TwistedKind::SO3Minus);
  c.metric("o2minus_relations", static_cast<std::int64_t>(o2.checks.size()));
  c.metric("so3minus_relations", static_cast<std::int64_t>(so3.checks.size()));
}

// --- SO_-1(3) ----------------------------------------------------------------------

void rho_image(Ctx& c) {
  std::vector<IntMatrix> image;
  for (const auto& x : s4().elements()) {
    const IntMatrix r = rho(x);
    c.expect(r.is_signed_permutation(), "rho(" + x.to_cycle_string() + ") is not signed");
    c.expect(r.determinant() == x.sign(), "det rho(" + x.to_cycle_string() + ") != sgn");
    for (const auto& y : s4().elements())
      if (rho(x * y) != r * rho(y)) c.expect(false, "rho is not multiplicative");
    image.push_back(r);
  }
  std::sort(image.begin(), image.end());
  c.expect(image == so3minus_characters(), "rho(S4) differs from the SO_-1(3) characters");
  std::vector<IntMatrix> klein;
  const PermGroup diag = diagonal_klein();
  for (const auto& v : diag.elements()) klein.push_back(rho(v));
  std::sort(klein.begin(), klein.end());
  c.expect(klein == diagonal_klein_matrices(), "rho of the diagonal Klein is not the diagonal set");
  c.metric("image_size", static_cast<std::int64_t>(image.size()));
  c.note("rho(diagonal Klein): " + join_matrices(klein));
}

void normalizer_24(Ctx& c) {
  const auto n = klein_normalizer_so3();
  std::int64_t negated = 0;
  for (const auto& e : n) negated += e.sign == -1;
  c.metric("count", static_cast<std::int64_t>(n.size()));
  c.metric("negated_rho", negated);
}

void automorphisms_24(Ctx& c) {
  std::set<Permutation> actions;
  std::int64_t checks = 0;
  for (const auto& x : s4().elements()) {
    actions.insert(automorphism_check(x).character_action);
    ++checks;
  }
  c.metric("checks", checks);
  c.metric("distinct_actions", static_cast<std::int64_t>(actions.size()));
  c.expect(actions.size() == 24, "character actions are not pairwise distinct");
}

void phi_well_defined(Ctx& c) {
  std::int64_t relations = 0, embeddings = 0;
  for (const auto& x : s4().elements()) {
    relations += static_cast<std::int64_t>(phi_embedding(x).relations.checks.size());
    ++embeddings;
  }
  c.metric("embeddings", embeddings);
  c.metric("relations_checked", relations);
}

void embedding_images_3(Ctx& c) {
  const EmbeddingImages e = embedding_character_images();
  c.metric("distinct_images", static_cast<std::int64_t>(e.distinct.size()));
  c.metric("image_order", e.distinct.empty() ? 0 : static_cast<std::int64_t>(e.distinct.front().size()));
  c.metric("stabilizer_order", static_cast<std::int64_t>(e.stabilizer.order()));
  c.metric("conjugate_pairs", static_cast<std::int64_t>(e.conjugacies.size()));
  c.expect(e.distinct.size() == 3, "expected 3 distinct images");
  c.expect(e.conjugacies.size() == 3, "images are not pairwise conjugate");
  for (const auto& set : e.distinct) c.expect(set.size() == 8, "an image does not have 8 elements");
  for (std::size_t i = 0; i < e.xs.size(); ++i)
    for (std::size_t j = 0; j < e.xs.size(); ++j)
      if ((e.image_of[i] == e.image_of[j]) != e.stabilizer.contains(e.xs[j].inverse() * e.xs[i]))
        c.expect(false, "image equality is not governed by the stabilizer");
  c.note("stabilizer: " + join_cycles(e.stabilizer.elements()));
}

void generation_counterexample_check(Ctx& c) {
  const CharacterGroup tau = character_group(s4tau());
  const GenerationReport r = generation_counterexample(tau, embedding_character_images());
  c.metric("d_order", static_cast<std::int64_t>(r.tau_characters.order()));
  c.metric("generated_dd_order", static_cast<std::int64_t>(r.generated_dd.order()));
  c.metric("generated_ds4_order", static_cast<std::int64_t>(r.generated_ds4.order()));
  c.expect(r.matching_image.has_value(), "no embedding image realizes the twisted characters");
  c.expect(r.generated_dd == r.tau_characters, "<D u D> != D");
  c.expect(r.generated_dd != s4(), "<D u D> = S4");
  c.expect(r.generated_ds4 == s4(), "<D u S4> != S4");
  c.note("D: " + join_cycles(r.tau_characters.elements()));
}

std::vector<CheckInfo> build_registry() {
  std::vector<CheckInfo> r = {
      {"incseq-oracle",
       "Completing an increasing sequence by the dot diagram agrees with evaluating the "
       "completion map's generator formula, for every sequence with n <= max_n.",
       incseq_oracle},
      {"incseq-generation",
       "The completions of I_{k,n} generate S_n for 1 <= k <= n-1 and the trivial group for "
       "k in {0, n}; in particular the six completions of I_{2,4} generate S4.",
       incseq_generation},
      {"hopf-axioms",
       "C(S4), Q[S4] and the twisted algebra s4tau satisfy associativity, coassociativity, "
       "the counit law, the bialgebra law, the antipode law and the star axioms.",
       hopf_axioms},
      {"cocycle-valid",
       "The Klein bicharacter is a unital, self-inverse 2-cocycle, and so is its pullback "
       "to C(S4) along restriction to an easy Klein subgroup.",
       cocycle_valid},
      {"s4tau-characters",
       "The twist of C(S4) by the easy-Klein cocycle is noncommutative and its character "
       "group is dihedral of order 8.",
       s4tau_characters},
      {"double-twist",
       "Twisting twice by the self-inverse cocycle restores C(S4) exactly.", double_twist},
      {"klein-classification",
       "S4 has four Klein subgroups and only the diagonal one is invariant under all "
       "automorphisms.",
       klein_classification},
      {"d4-classification",
       "S4 has three dihedral subgroups of order 8, pairwise conjugate, each containing "
       "the diagonal Klein subgroup.",
       d4_classification},
      {"characters-o2minus",
       "The characters of O_-1(2) are the eight signed 2x2 permutation matrices, a "
       "dihedral group of order 8.",
       characters_o2minus},
      {"characters-so3minus",
       "The characters of SO_-1(3) are the 24 signed 3x3 permutation matrices whose "
       "nonzero entries multiply to 1, a group isomorphic to S4.",
       characters_so3minus},
      {"characters-snplus",
       "The characters of S_n^+ are the n! permutation matrices (n = 3, 4, 5), and I_{2,4}^+ "
       "has C(4,2) = 6 characters.",
       characters_snplus},
      {"sign-table",
       "Twisting by the Klein bicharacter makes two generators anticommute exactly when "
       "they share a row or a column but not both.",
       sign_table},
      {"det-to-perm",
       "Under the twist every signed term of the determinant becomes an unsigned term, so "
       "the determinant relation becomes the permanent relation (sizes 2 and 3).",
       det_to_perm},
      {"twisted-presentation",
       "The graded twisted coordinates of O(2) and SO(3) satisfy every defining relation "
       "of O_-1(2) and SO_-1(3).",
       twisted_presentation},
      {"rho-image",
       "Restricting the permutation action to (1,1,1,1)^perp gives a homomorphism rho from "
       "S4 onto the SO_-1(3) character matrices with det rho = sgn, sending the diagonal "
       "Klein subgroup to the diagonal sign matrices.",
       rho_image},
      {"normalizer-24",
       "Exactly 24 determinant-one signed permutation matrices normalize the diagonal Klein "
       "set, each equal to rho(x) up to sign.",
       normalizer_24},
      {"automorphisms-24",
       "For every x in S4, A -> rho(x)^T A rho(x) preserves the SO_-1(3) relations, and the "
       "24 induced actions on characters are pairwise distinct.",
       automorphisms_24},
      {"phi-well-defined",
       "For every x in S4 the map A -> rho(x) blockdiag(A~, perm A~) rho(x)^T respects all "
       "SO_-1(3) relations inside O_-1(2).",
       phi_well_defined},
      {"embedding-images-3",
       "The character images of the 24 embeddings are exactly three dihedral subgroups of "
       "order 8, pairwise conjugate.",
       embedding_images_3},
      {"generation-counterexample",
       "A dihedral subgroup D realized both by the twisted C(S4) and by an embedded "
       "O_-1(2) satisfies <D u D> = D != S4, while <D u S4> = S4.",
       generation_counterexample_check},
  };
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return r;
}

}  // namespace

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> r = build_registry();
  return r;
}

CheckResult run_check(const std::string& id, const RunConfig& config) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& c) { return c.id == id; });
  if (it == reg.end()) throw UnknownCheck("unknown check '" + id + "'");

  CheckResult res;
  res.check_id = id;
  CheckContext ctx(config);
  const auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    it->body(ctx);
  } catch (const std::exception& e) {
    error = e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  if (config.timings)
    res.duration_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  res.metrics = ctx.metrics();
  res.labels = ctx.labels();
  std::vector<std::string> lines;
  if (!error.empty()) {
    res.status = CheckStatus::Error;
    lines.push_back("error: " + error);
  } else if (!ctx.failures().empty()) {
    res.status = CheckStatus::Fail;
  }
  for (const auto& f : ctx.failures()) lines.push_back("failed: " + f);
  for (const auto& n : ctx.notes()) lines.push_back(n);
  for (const auto& l : lines) res.details += (res.details.empty() ? "" : "\n") + l;
  return res;
}

std::vector<CheckResult> run(const RunConfig& config) {
  if (config.max_n < 1 || config.max_n > kMaxNCap)
    throw InvalidArgument("max_n must lie in [1, " + std::to_string(kMaxNCap) + "]");
  std::set<std::string> ids;
  for (const auto& id : config.checks) {
    if (id == "all") {
      for (const auto& c : registry()) ids.insert(c.id);
      continue;
    }
    const auto& reg = registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const auto& c) { return c.id == id; }))
      throw UnknownCheck("unknown check '" + id + "'");
    ids.insert(id);
  }
  std::vector<CheckResult> out;
  if (config.parallel) {
    std::vector<std::future<CheckResult>> futures;
    for (const auto& id : ids)
      futures.push_back(std::async(std::launch::async, [&config, id] { return run_check(id, config); }));
    for (auto& f : futures) out.push_back(f.get());
  } else {
    for (const auto& id : ids) out.push_back(run_check(id, config));
  }
  // ids is ordered, so out already is.
  return out;
}

std::string render_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json o;
    o["check_id"] = r.check_id;
    o["status"] = status_name(r.status);
    o["metrics"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.metrics) o["metrics"][k] = v;
    o["labels"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.labels) o["labels"][k] = v;
    o["details"] = r.details;
    o["duration_ms"] = r.duration_ms;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string render_markdown(const std::vector<CheckResult>& results) {
  std::ostringstream md;
  md << "# qsym verification report\n";
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.status == CheckStatus::Pass;
  if (!results.empty()) md << "\n" << passed << " of " << results.size() << " checks passed.\n";
  const auto& reg = registry();
  for (const auto& r : results) {
    md << "\n## " << r.check_id << "\n\n";
    auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& c) { return c.id == r.check_id; });
    if (it != reg.end()) md << it->statement << "\n\n";
    md << "Status: **" << status_name(r.status) << "**\n";
    if (!r.metrics.empty() || !r.labels.empty()) {
      md << "\n| key | value |\n| --- | --- |\n";
      for (const auto& [k, v] : r.metrics) md << "| " << k << " | " << v << " |\n";
      for (const auto& [k, v] : r.labels) md << "| " << k << " | " << v << " |\n";
    }
    if (!r.details.empty()) md << "\n```\n" << r.details << "\n```\n";
  }
  return md.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw Error("failed writing '" + path + "'");
}

}  // namespace qsym
