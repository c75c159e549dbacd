#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isbt/errors.hpp"
#include "isbt/rng.hpp"

namespace isbt {

// Two-dimensional Chinese restaurant process over ordered industry pairs.
//
// Sequential process for link t (N = t-1 prior links, K industries so far):
//   with prob eta/(N+eta): create industry K and pick uniformly among the
//     2K+1 pairs that involve it;
//   with prob N/(N+eta): pick pair z among the K^2 existing-industry pairs
//     with prob (n_z + alpha) / (K^2 alpha + N).
// Link 1 deterministically creates industry 0 and pair (0,0).
//
// eta controls new industries, alpha new pairs among existing industries.
struct Crp2dParams {
  double alpha = 0.05;
  double eta = 0.05;

  void validate() const {
    if (!(alpha > 0.0) || !(eta > 0.0))
      throw DataError("crp2d: alpha and eta must be positive");
  }
};

enum class Crp2dEvent { Existing, NewPair, NewIndustry };

const char* to_string(Crp2dEvent e);
Crp2dEvent crp2d_event_from_string(const std::string& s);

// Ordered assignment sequence with per-step creation events. Industry ids
// are dense in order of first appearance.
struct Crp2dTrace {
  std::vector<std::pair<int, int>> pairs;
  std::vector<Crp2dEvent> events;

  std::size_t size() const { return pairs.size(); }
  void validate() const;  // throws DataError on any invariant violation

  std::string to_json() const;
  static Crp2dTrace from_json(const std::string& text);
};

// Order-free sufficient statistics: dense K x K pair counts.
struct PairCounts {
  int K = 0;
  std::vector<long long> counts;  // K*K row-major, counts[k1*K + k2]
  long long total = 0;            // N_l

  long long at(int k1, int k2) const { return counts[static_cast<std::size_t>(k1) * K + k2]; }
  void validate() const;  // every industry must appear in >= 1 counted pair

  static PairCounts from_trace(const Crp2dTrace& trace);
};

// Forward simulation of n_links assignments.
Crp2dTrace simulate(long n_links, const Crp2dParams& params, Rng& rng);
Crp2dTrace simulate(long n_links, const Crp2dParams& params, std::uint64_t seed);

// Exact (non-exchangeable) log probability of an ordered trace: the product
// of the per-step factors above, with the new-industry pair choice
// contributing 1/(2K+1).
double sequential_log_prob(const Crp2dTrace& trace, const Crp2dParams& params);

// Exchangeable approximation of the joint, up to its undefined normalizing
// constant:
//   log[ G(eta) prod_z G(n_z+alpha) / (G(N_l+eta) G(alpha)^{K^2})
//        * (eta/alpha)^K * prod_{k=1..K} 1/(k^2-(k-1)^2) ]
// where the product over z runs over all K^2 pairs.
double approx_joint_log_prob(const PairCounts& counts, const Crp2dParams& params);

// One conditional outcome for adding a link to `counts`.
struct PriorOutcome {
  int k1 = 0;
  int k2 = 0;
  Crp2dEvent kind = Crp2dEvent::Existing;
  double weight = 0.0;  // up to a shared normalizer
};

// Conditional prior weights for the next link given counts (typically the
// state with the resampled link removed): n_z+alpha per used pair, alpha per
// unused pair among existing industries, and eta spread uniformly over the
// 2K+1 pairs that involve one new industry. Equals the ratio of the
// approximate joint before/after adding the link, times (N_l + eta).
std::vector<PriorOutcome> prior_conditional_weights(const PairCounts& counts,
                                                    const Crp2dParams& params);

}  // namespace isbt
