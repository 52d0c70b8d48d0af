// End-to-end acceptance run: one PASS/FAIL line per criterion, each with a
// wall-clock bound. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qsym/checks.hpp"
#include "qsym/hopf.hpp"
#include "qsym/incseq.hpp"
#include "qsym/perm.hpp"
#include "qsym/twist.hpp"

using namespace qsym;

namespace {

struct Criterion {
  int number;
  std::string what;
  double bound_ms;
  std::function<std::string()> body;  ///< empty string on success
};

RunConfig config_with(int max_n) {
  RunConfig c;
  c.max_n = max_n;
  return c;
}

// Runs the check and compares the listed metrics and labels.
std::string expect_check(const std::string& id,
                         const std::vector<std::pair<std::string, std::int64_t>>& metrics = {},
                         const std::vector<std::pair<std::string, std::string>>& labels = {},
                         int max_n = kDefaultMaxN) {
  const CheckResult r = run_check(id, config_with(max_n));
  if (r.status != CheckStatus::Pass) return id + ": " + status_name(r.status) + ": " + r.details;
  for (const auto& [k, v] : metrics) {
    auto it = r.metrics.find(k);
    if (it == r.metrics.end() || it->second != v)
      return id + ": metric " + k + " != " + std::to_string(v);
  }
  for (const auto& [k, v] : labels) {
    auto it = r.labels.find(k);
    if (it == r.labels.end() || it->second != v) return id + ": label " + k + " != " + v;
  }
  return "";
}

std::string all_of(std::initializer_list<std::function<std::string()>> parts) {
  for (const auto& p : parts)
    if (auto e = p(); !e.empty()) return e;
  return "";
}

std::string completions_generate_s4() {
  const auto seqs = all_sequences(2, 4);
  if (seqs.size() != 6) return "I_{2,4} does not have 6 sequences";
  std::vector<Permutation> gens;
  for (const auto& s : seqs) gens.push_back(complete_formula(s));
  const PermGroup g = generate(4, gens);
  if (g != PermGroup::symmetric(4)) return "completions generate a group of order " + std::to_string(g.order());
  return "";
}

std::string s4tau_axioms() {
  const HopfAxiomReport r = verify_hopf_axioms(s4tau());
  const bool suites[6] = {r.associativity, r.coassociativity, r.counit, r.bialgebra, r.antipode, r.star};
  for (bool ok : suites)
    if (!ok) return "s4tau axiom failure: " + (r.failures.empty() ? std::string() : r.failures.front());
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "O_-1(2) has 8 characters forming D4", 1000,
       [] { return expect_check("characters-o2minus", {{"count", 8}}, {{"group_type", "D4"}}); }},
      {2, "SO_-1(3) has 24 characters forming S4", 1000,
       [] { return expect_check("characters-so3minus", {{"count", 24}}, {{"group_type", "S4"}}); }},
      {3, "S_n^+ has n! characters for n = 3, 4, 5 and I_{2,4}^+ has 6", 5000,
       [] {
         return expect_check("characters-snplus",
                             {{"count_n3", 6}, {"count_n4", 24}, {"count_n5", 120}, {"incseq_2_4", 6}});
       }},
      {4, "completion oracle and generation sweep for n <= 7", 60000,
       [] {
         return all_of({[] { return expect_check("incseq-oracle", {{"max_n", 7}}, {}, 7); },
                        [] { return expect_check("incseq-generation", {{"max_n", 7}}, {}, 7); }});
       }},
      {5, "the 6 completions of I_{2,4} generate S4", 1000, completions_generate_s4},
      {6, "s4tau axioms, noncommutativity and D4 characters", 10000,
       [] {
         return all_of({s4tau_axioms, [] {
                          return expect_check("s4tau-characters", {{"count", 8}}, {{"group_type", "D4"}});
                        }});
       }},
      {7, "twisting twice restores C(S4)", 5000, [] { return expect_check("double-twist"); }},
      {8, "Klein and D4 subgroups of S4", 1000,
       [] {
         return all_of({[] {
                          return expect_check("klein-classification",
                                              {{"klein_subgroups", 4}, {"characteristic", 1}});
                        },
                        [] {
                          return expect_check("d4-classification",
                                              {{"d4_subgroups", 3},
                                               {"conjugate_pairs", 3},
                                               {"containing_diagonal_klein", 3}});
                        }});
       }},
      {9, "81-entry sign table and determinant-to-permanent signs", 1000,
       [] {
         return all_of({[] { return expect_check("sign-table", {{"entries", 81}}); },
                        [] { return expect_check("det-to-perm", {{"permutations_checked", 8}}); }});
       }},
      {10, "twisted presentation relations for O_-1(2) and SO_-1(3)", 30000,
       [] { return expect_check("twisted-presentation"); }},
      {11, "24-element Klein normalizer and 24 distinct automorphism actions", 10000,
       [] {
         return all_of({[] { return expect_check("normalizer-24", {{"count", 24}}); },
                        [] {
                          return expect_check("automorphisms-24",
                                              {{"checks", 24}, {"distinct_actions", 24}});
                        }});
       }},
      {12, "phi is relation-preserving and has 3 conjugate D4 images", 30000,
       [] {
         return all_of({[] { return expect_check("phi-well-defined", {{"embeddings", 24}}); },
                        [] {
                          return expect_check("embedding-images-3",
                                              {{"distinct_images", 3},
                                               {"image_order", 8},
                                               {"conjugate_pairs", 3}});
                        }});
       }},
      {13, "<D u D> = D != S4 and <D u S4> = S4", 1000,
       [] {
         return expect_check("generation-counterexample",
                             {{"generated_dd_order", 8}, {"generated_ds4_order", 24}});
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      error = c.body();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && ms >= c.bound_ms) error = "exceeded time bound";
    const bool ok = error.empty();
    failures += !ok;
    std::printf("criterion %2d: %s (%.0f ms, bound %.0f ms) %s%s%s\n", c.number, ok ? "PASS" : "FAIL",
                ms, c.bound_ms, c.what.c_str(), ok ? "" : " -- ", error.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
