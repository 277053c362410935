#include "twotree/verify.hpp"

#include <algorithm>

#include "twotree/counting.hpp"
#include "twotree/enumeration.hpp"
#include "twotree/error.hpp"
#include "twotree/extremal.hpp"
#include "twotree/generators.hpp"
#include "twotree/recognition.hpp"

namespace twotree {

void Check::record(bool ok, const std::string& where) {
  ++instances;
  if (ok) return;
  if (failures == 0) first_failure = where;
  ++failures;
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

Check& SuiteResult::check(const std::string& name) {
  for (Check& c : checks) {
    if (c.name == name) return c;
  }
  Check fresh;
  fresh.name = name;
  checks.push_back(std::move(fresh));
  return checks.back();
}

namespace {

void require_range(std::int64_t value, std::int64_t lo, std::int64_t hi, const char* what) {
  if (value < lo || value > hi) {
    throw Error(ErrorKind::OutOfRange, std::string(what) + " must be in [" + std::to_string(lo) +
                                           ", " + std::to_string(hi) + "]");
  }
}

std::string label(std::int64_t n, std::size_t index) {
  return "n=" + std::to_string(n) + " #" + std::to_string(index);
}

}  // namespace

SuiteResult verify_oracle_suite(std::int64_t n_max) {
  require_range(n_max, 3, kSurveyMaxN, "n-max");
  SuiteResult out{"oracle", {}};
  for (std::int64_t n = 3; n <= n_max; ++n) {
    const auto corpus = all_labeled_two_tree_constructions(n);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto g = realize(corpus[i]);
      const BigCount k = kirchhoff_count(g);
      const auto streamed = enumerate_all(corpus[i], EnumerationMode::Streaming, [](auto) {});
      out.check("kirchhoff equals brute force").record(k == brute_force_count(g), label(n, i));
      out.check("stream length equals kirchhoff").record(BigCount(streamed) == k, label(n, i));
      out.check("construction recurrence equals kirchhoff")
          .record(count_via_construction(corpus[i]) == k, label(n, i));
    }
  }
  return out;
}

SuiteResult verify_extremal_suite(std::int64_t n_max) {
  require_range(n_max, 4, kSurveyMaxN, "n-max");
  SuiteResult out{"extremal", {}};
  for (std::int64_t n = 4; n <= n_max; ++n) {
    const auto s = survey_extremal(n);
    const std::string where = "n=" + std::to_string(n);
    out.check("minimum equals book count").record(s.min == count_book(n), where);
    out.check("maximum equals two-simplicial count").record(s.max == count_two_simplicial(n), where);
    out.check("minimum attained only by books")
        .record(s.min_attainers_all_books && s.books_all_attain_min, where);
    out.check("maximum attained only by two-simplicial graphs")
        .record(s.max_attainers_all_two_simplicial && s.two_simplicial_all_attain_max, where);

    if (n < 5) continue;
    const auto corpus = all_labeled_two_trees(n);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& g = corpus[i];
      if (!is_book(g)) {
        const auto r = improve_min(g);
        out.check("improve_min decreases the count").record(r.winner_count() < r.t_g, label(n, i));
        out.check("split identity")
            .record(2 * r.t_g == r.t_g1 + r.t_g2 + 2 * r.gamma && r.gamma >= 1, label(n, i));
      }
      if (simplicial_vertices(g).size() > 2) {
        const auto r = improve_max(g);
        out.check("improve_max increases the count").record(r.t_gprime > r.t_g, label(n, i));
      }
    }
  }
  return out;
}

SuiteResult verify_bounds_suite(std::uint64_t trials, std::uint64_t seed, std::int64_t n_max) {
  require_range(n_max, 2, 64, "n-max");
  SuiteResult out{"bounds", {}};
  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto n = static_cast<std::int64_t>(2 + rng.uniform(static_cast<std::uint64_t>(n_max - 1)));
    const auto b = verify_bounds(realize(random_two_tree(n, rng.next())));
    out.check("lower bound 2^(n-2)").record(b.lower_ok, label(n, i));
    out.check("upper bound 3^(n-2)").record(b.upper_ok, label(n, i));
  }
  return out;
}

SuiteResult verify_identities_suite(std::uint64_t trials, std::uint64_t seed) {
  SuiteResult out{"identities", {}};
  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto host_n = static_cast<std::int64_t>(3 + rng.uniform(5));
    const auto host = random_two_tree(host_n, rng.next());
    const auto host_g = realize(host);
    const Edge e0 = host_g.edges()[rng.uniform(host_g.edge_count())];
    const BigCount alpha = kirchhoff_count(host_g);
    const BigCount beta = count_containing(host_g, std::span<const Edge>(&e0, 1));
    auto state = ChainState::start(alpha, beta);
    for (std::int64_t p = 1; p <= 5; ++p) {
      state = chain_step(state);
      SplitMix64 chain_rng = rng.split();
      const auto chain = grow_chain(host, e0, static_cast<std::size_t>(p), chain_rng);
      const auto g = realize(chain.construction);
      auto on = [&](const Edge& e) { return count_containing(g, std::span<const Edge>(&e, 1)); };
      const auto expected = chain_edge_counts(alpha, beta, p);
      const BigCount t_e0 = on(chain.e0);
      const BigCount t_eprime = on(chain.e_prime);
      const BigCount t_ep = on(chain.e_last);
      const std::string where = "trial " + std::to_string(i) + " p=" + std::to_string(p);
      out.check("chain t_p and s_p closed form")
          .record(kirchhoff_count(g) == state.t && t_ep == state.s && state.satisfies_closed_form(),
                  where);
      out.check("chain T(e0) closed form").record(t_e0 == expected.e0, where);
      out.check("chain T(e') closed form").record(t_eprime == expected.e_prime, where);
      out.check("chain T(e_p) closed form").record(t_ep == expected.e_last, where);
      out.check("chain T(e_p) > T(e0)").record(t_ep > t_e0, where);
      if (p >= 2) out.check("chain T(e_p) > T(e') for p >= 2").record(t_ep > t_eprime, where);
      else out.check("chain T(e_p) = T(e') at p = 1").record(t_ep == t_eprime, where);
    }

    // One-vertex step identity along a random construction.
    const auto c = random_two_tree(static_cast<std::int64_t>(3 + rng.uniform(10)), rng.next());
    for (std::size_t k = 3; k <= c.vertex_count(); ++k) {
      const auto prev = prefix_graph(c, k - 1);
      const Edge attach = c.attachment(static_cast<Vertex>(k - 1));
      out.check("step identity T(G_k) = 2T(G_k-1) + T(G_k-1; attach)")
          .record(kirchhoff_count(prefix_graph(c, k)) ==
                      2 * kirchhoff_count(prev) + count_containing(prev, std::span<const Edge>(&attach, 1)),
                  "trial " + std::to_string(i) + " k=" + std::to_string(k));
    }

    const auto glue = random_glue_instance(rng);
    out.check("glue table identities")
        .record(glue_identity_check(glue.h, glue.j, glue.shared, glue.s), "trial " + std::to_string(i));
  }
  return out;
}

}  // namespace twotree
