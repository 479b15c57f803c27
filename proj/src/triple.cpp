#include "evspace/triple.hpp"

#include "evspace/errors.hpp"

namespace evspace {

CondTriple::CondTriple(Prob p_, Prob q_, Prob r_, std::optional<Prob> marginal_)
    : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), marginal(std::move(marginal_)) {
  if (marginal && *marginal == Prob::zero())
    throw InputError("marginal must be in (0,1]");
}

std::string to_string(const CondTriple& t) {
  return "(" + t.p.str() + ", " + t.q.str() + ", " + t.r.str() + ")";
}

}  // namespace evspace
