#ifndef MONKBENCH_FORCING_AMALGAM_HPP
#define MONKBENCH_FORCING_AMALGAM_HPP

#include <string>
#include <vector>

#include "monkbench/forcing/condition.hpp"

namespace monkbench {

/// The order-preserving bijection from one label set onto another of the same
/// size. Because it pairs the i-th label with the i-th label, transporting a
/// row along it leaves the bit pattern unchanged.
class IsoMap {
 public:
  /// UsageError unless both are label sets of equal size.
  IsoMap(std::vector<Label> source, std::vector<Label> target);

  const std::vector<Label>& source() const { return source_; }
  const std::vector<Label>& target() const { return target_; }
  /// DomainError outside the source.
  Label operator()(Label a) const;
  IsoMap inverse() const { return IsoMap(target_, source_); }

 private:
  std::vector<Label> source_;
  std::vector<Label> target_;
};

/// Amalgam of two isomorphic conditions, with h mapping w^{p0} onto w^{p1}:
/// F^q = truncations at w^q and INF of f joined with f o h, for f in F^{p1}.
/// PreconditionError naming clause "a".."d" (or "valid") when the pair is not
/// a Delta-pair; IntegrityError if q is not a condition above both.
PresentationPtr pair_amalgam(const PresentationPtr& p0, const PresentationPtr& p1, const IsoMap& h,
                             const PosetBounds& bounds = {});

/// Conditions p^0..p^{m-1} with maps[l] = H_{l,0} from w^{p0} onto w^{pl}
/// (maps[0] is the identity) and common root.
struct DeltaFamily {
  std::vector<PresentationPtr> conditions;
  std::vector<Label> root;
  std::vector<IsoMap> maps;

  std::size_t m() const { return conditions.size(); }
};

/// tau is a term over x1..xn; alpha0 lists the n labels substituted for them.
struct AmalgamInstance {
  DeltaFamily family;
  Term tau;
  std::vector<Label> alpha0;

  std::size_t n() const { return alpha0.size(); }
  /// tau(x_{alpha^l_1}, ..., x_{alpha^l_n}) with alpha^l_i = H_{l,0}(alpha0_i).
  Term tau_at(std::size_t l) const;
};

/// Substitutes x_labels[i-1] for the variable xi. DomainError when tau uses a
/// variable outside 1..labels.size().
Term instantiate(const Term& tau, std::span<const Label> labels);

/// Clause checks in order a (members are conditions), b (maps are the
/// order-preserving bijections), c (maps carry rows onto rows), d (Delta-system
/// shape), e (alpha0 ascending in w^{p0}), f (tau(alpha0) nonzero and outside
/// the subalgebra generated by the root), g (m-1 > n+1). PreconditionError
/// names the first failing clause.
void check_amalgam_preconditions(const AmalgamInstance& inst);
/// Clauses a..d only.
void check_delta_family(const DeltaFamily& family);
/// Clause f for tau(alpha0) over p0 and root.
bool clause_f_holds(const PresentationPtr& p0, const Term& tau, std::span<const Label> alpha0,
                    std::span<const Label> root);

struct SeparatingPair {
  Cutoff gamma = Cutoff::infinity();
  Row f0 = 0;
  Row f1 = 0;
};

/// Least gamma in w^{p0} or INF, then lexicographically least (f0, f1) in
/// cl(F^{p0}), with f0 and f1 agreeing on the root, tau(alpha0) false at f0
/// and true at f1, and both unchanged by truncation at gamma.
/// PreconditionError("f") when clause f fails.
SeparatingPair find_separating_pair(const PresentationPtr& p0, const Term& tau, std::span<const Label> alpha0,
                                    std::span<const Label> root);

/// AND of tau at the odd tuples, minus OR of tau at the even tuples from 2 on
/// (no minus when m < 3). UsageError when m < 2.
Term tau_star(const Term& tau, const std::vector<std::vector<Label>>& tuples);

struct CertificateFact {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Certificate {
  std::vector<CertificateFact> facts;

  bool all_pass() const;
};

struct AmalgamResult {
  PresentationPtr q;
  Term tau_star = Term::zero();
  SeparatingPair pair;
  Row g = 0;
  Certificate certificate;
};

/// The m-fold amalgam. Checks every precondition first; builds the separating
/// pair, the mixed row g and F^q; then checks q is a condition above every
/// p^l with w^q the union, tau* nonzero in BA[q], and tau* <= tau(alpha0)
/// there. IntegrityError if any of those facts fails.
AmalgamResult m_amalgam(const AmalgamInstance& inst, const PosetBounds& bounds = {});

}  // namespace monkbench

#endif  // MONKBENCH_FORCING_AMALGAM_HPP
