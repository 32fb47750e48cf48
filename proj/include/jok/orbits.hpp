// Jordan frames, orbit representatives and classification, structure-group
// sampling, the generic-sum Monte-Carlo check and the signature calculus
// (support signatures, rank reduction, lambda components).
#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "jok/algebra.hpp"
#include "jok/errors.hpp"
#include "jok/peirce.hpp"
#include "jok/rng.hpp"
#include "jok/spectral.hpp"

namespace jok {

// n mutually orthogonal primitive idempotents summing to the unit.
struct JordanFrame {
  std::vector<Element> idempotents;
};

inline JordanFrame standard_frame(const Algebra& a) {
  JordanFrame frame;
  if (a->family == Family::Spin) {
    // (1/2, +-v/2) with v the first vector basis element
    VectorXd c1 = VectorXd::Zero(a->dim);
    c1[0] = 0.5;
    c1[1] = 0.5;
    VectorXd c2 = VectorXd::Zero(a->dim);
    c2[0] = 0.5;
    c2[1] = -0.5;
    frame.idempotents.emplace_back(a, c1);
    frame.idempotents.emplace_back(a, c2);
  } else {
    for (int i = 0; i < a->rank; ++i) {
      VectorXd c = VectorXd::Zero(a->dim);
      c[i] = 1.0;
      frame.idempotents.emplace_back(a, c);
    }
  }
  return frame;
}

inline void require_valid_signature(const Signature& p) {
  if (p.plus < 0 || p.minus < 0)
    throw precondition_error("signature components must be non-negative");
}

// xi_p = c_1 + ... + c_{p+} - c_{p+ +1} - ... - c_{p+ + p-} over the standard
// frame.
inline Element orbit_representative(const Algebra& a, const Signature& p) {
  require_valid_signature(p);
  if (p.size() > a->rank)
    throw precondition_error("invalid signature: |p| exceeds the rank");
  const JordanFrame frame = standard_frame(a);
  Element xi = zero_element(a);
  for (int i = 0; i < p.plus; ++i) xi = add(xi, frame.idempotents[i]);
  for (int i = 0; i < p.minus; ++i)
    xi = sub(xi, frame.idempotents[p.plus + i]);
  return xi;
}

// The L-orbit label of x under the trace-form identification of N* with N.
inline Signature classify_orbit(const Element& x,
                                double zero_tol = kZeroTolDefault) {
  return signature_of(x, zero_tol);
}

namespace detail {

inline int env_thread_cap() {
  if (const char* s = std::getenv("JOK_THREADS")) {
    const int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 1;
}

// Run fn(trial) for trial in [0, trials) with results aggregated in index
// order; worker count is capped by JOK_THREADS.
template <typename T, typename Fn>
std::vector<T> run_trials(int trials, Fn&& fn) {
  std::vector<T> results(trials);
  const int threads = std::min(env_thread_cap(), trials > 0 ? trials : 1);
  if (threads <= 1) {
    for (int t = 0; t < trials; ++t) results[t] = fn(t);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      for (int t = w; t < trials; t += threads) results[t] = fn(t);
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace detail

// A word of structure-group factors, each either Q(u) with u a Gaussian
// direction normalized to unit spectral scale (rejected unless all
// |eigenvalues| >= 0.1, so every factor has condition number at most 100) or
// tau(z) relative to a standard-frame idempotent with z a unit Gaussian
// direction in its half space. The first factor is always a Q(u): a word of
// tau factors alone fixes every frame idempotent orthogonal to their Peirce
// spaces, which would give the sampled action atoms at the canonical orbit
// representatives. Deterministic given the seed.
inline LinearOperator random_structure_map(const Algebra& a,
                                           std::uint64_t seed,
                                           int word_length = 4) {
  if (word_length < 1)
    throw precondition_error("word_length must be at least 1");
  Rng rng(mix64(seed));
  const JordanFrame frame = standard_frame(a);
  MatrixXd g = MatrixXd::Identity(a->dim, a->dim);
  for (int w = 0; w < word_length; ++w) {
    const bool use_quad = (w == 0) || (rng.next_u64() & 1) == 0;
    if (use_quad) {
      bool found = false;
      for (int attempt = 0; attempt < 100 && !found; ++attempt) {
        VectorXd coords(a->dim);
        for (int i = 0; i < a->dim; ++i) coords[i] = rng.gaussian();
        double max_abs = 0.0, min_abs = std::numeric_limits<double>::infinity();
        for (double ev : eigenvalues(Element(a, coords))) {
          max_abs = std::max(max_abs, std::abs(ev));
          min_abs = std::min(min_abs, std::abs(ev));
        }
        if (max_abs == 0.0 || min_abs < 0.1 * max_abs) continue;
        g = quadratic_rep(Element(a, coords / max_abs)).matrix * g;
        found = true;
      }
      if (!found)
        throw numerical_error(
            "structure-map sampling exhausted its rejection budget");
    } else {
      const auto& c = frame.idempotents[rng.below(frame.idempotents.size())];
      const PeirceSystem sys = peirce_system(c);
      VectorXd coords(a->dim);
      for (int i = 0; i < a->dim; ++i) coords[i] = rng.gaussian();
      Element z = sys.E12.apply(Element(a, coords));
      const double zn = z.coords.norm();
      if (zn > 1.0) z = scale(1.0 / zn, z);
      g = frobenius_map(c, z).matrix * g;
    }
  }
  return LinearOperator{a, g};
}

struct GenericSumReport {
  Signature predicted;
  int trials = 0;
  int matches = 0;
  struct Deviation {
    std::uint64_t seed;
    Signature observed;
  };
  std::vector<Deviation> deviations;
};

// Monte-Carlo check that sum_i g_i xi_{p_i} lands in the orbit of the
// componentwise signature sum. Requires the stable range sum |p_1|+...+|p_s|
// <= rank.
inline GenericSumReport generic_sum_signature(
    const Algebra& a, const std::vector<Signature>& signatures, int trials,
    std::uint64_t seed) {
  if (signatures.empty())
    throw precondition_error("at least one signature is required");
  if (trials < 1) throw precondition_error("trials must be at least 1");
  int total = 0;
  Signature predicted;
  for (const auto& p : signatures) {
    require_valid_signature(p);
    total += p.size();
    predicted = predicted + p;
  }
  if (total > a->rank)
    throw precondition_error(
        "stable range violated: sum of |p_i| exceeds the rank");

  std::vector<Element> reps;
  reps.reserve(signatures.size());
  for (const auto& p : signatures) reps.push_back(orbit_representative(a, p));

  auto one_trial = [&](int t) -> Signature {
    const std::uint64_t trial_seed = split_seed(seed, t);
    Element sum = zero_element(a);
    for (size_t i = 0; i < reps.size(); ++i) {
      const auto g = random_structure_map(a, split_seed(trial_seed, i));
      sum = add(sum, g.apply(reps[i]));
    }
    return classify_orbit(sum);
  };
  const auto observed = detail::run_trials<Signature>(trials, one_trial);

  GenericSumReport report;
  report.predicted = predicted;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    if (observed[t] == predicted) {
      ++report.matches;
    } else {
      report.deviations.push_back({split_seed(seed, t), observed[t]});
    }
  }
  return report;
}

// sign t in the paper's convention: (1,0) for t > 0, (0,1) for t < 0.
enum class TSign { Plus, Minus };

inline Signature t_signature(TSign t) {
  return t == TSign::Plus ? Signature{1, 0} : Signature{0, 1};
}

// sign_N(tc + n_-) = sign t + sign_{N_-}(n_-), in a rank-n ambient algebra.
inline Signature n_support_signature(int rank, TSign t_sign,
                                     const Signature& kappa_sig) {
  require_valid_signature(kappa_sig);
  if (kappa_sig.size() > rank - 1)
    throw precondition_error("kappa signature is not valid in rank n-1");
  const Signature r = t_signature(t_sign) + kappa_sig;
  if (r.size() > rank)
    throw numerical_error("support signature exceeded the ambient rank");
  return r;
}

// sign_{N_-} kappa_t = r - sign t; empty when a component would go negative
// (the corresponding summand is simply absent).
inline std::optional<Signature> reduce_signature(const Signature& r,
                                                 TSign t_sign) {
  require_valid_signature(r);
  const Signature s = t_signature(t_sign);
  const Signature out{r.plus - s.plus, r.minus - s.minus};
  if (out.plus < 0 || out.minus < 0) return std::nullopt;
  return out;
}

enum class OscillatorTag { OmegaPlus, OmegaMinus };

struct LambdaComponent {
  Signature kappa_signature;
  OscillatorTag oscillator_tag;

  bool operator==(const LambdaComponent& o) const {
    return kappa_signature == o.kappa_signature &&
           oscillator_tag == o.oscillator_tag;
  }
};

// Components of lambda_v for sign sigma_1 = r, sign sigma_2 = (1,0):
//   v < 0: (r+, r- - 1) tensored with omega_+;
//   v > 0: (r+, r- - 1) with omega_- and (r+ - 1, r-) with omega_+.
// Summands whose signature would go negative are dropped.
inline std::vector<LambdaComponent> lambda_components(const Signature& r,
                                                      TSign v_sign) {
  require_valid_signature(r);
  std::vector<LambdaComponent> out;
  auto push_if_valid = [&out](int plus, int minus, OscillatorTag tag) {
    if (plus >= 0 && minus >= 0)
      out.push_back({Signature{plus, minus}, tag});
  };
  if (v_sign == TSign::Minus) {
    push_if_valid(r.plus, r.minus - 1, OscillatorTag::OmegaPlus);
  } else {
    push_if_valid(r.plus, r.minus - 1, OscillatorTag::OmegaMinus);
    push_if_valid(r.plus - 1, r.minus, OscillatorTag::OmegaPlus);
  }
  return out;
}

}  // namespace jok
