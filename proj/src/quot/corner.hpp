#ifndef QDGA_QUOT_CORNER_HPP
#define QDGA_QUOT_CORNER_HPP

#include "quot/quotient.hpp"

namespace qdga {

// Corner algebra e_{n+1} B e_{n+1} with its generators and the polynomial
// P(Z) cut out by XY.  The multiplicative P is stored with its computed
// leading coefficient; comparisons are by root sets.
struct CornerWitness {
  int idempotent = -1;          // vertex id of e_{n+1}
  NCPoly X, Y, Z;
  std::vector<Scalar> poly;     // P coefficients, constant term first
  std::vector<Scalar> roots;
  Scalar leading;
};

struct CornerReport {
  bool gate_ok = false;         // sum lambda = 0 / prod q = 1
  Member comm_XZ = Member::UnknownAtCap;
  Member comm_YZ = Member::UnknownAtCap;
  Member comm_XY = Member::UnknownAtCap;
  Member xy_equals_P = Member::UnknownAtCap;
  bool stabilized = false;
  bool all_yes() const {
    return gate_ok && comm_XZ == Member::Yes && comm_YZ == Member::Yes &&
           comm_XY == Member::Yes && xy_equals_P == Member::Yes;
  }
};

CornerReport corner_verify_additive(const Preprojective& P, CornerWitness& w);
CornerReport corner_verify_multiplicative(const MultPreprojective& M, CornerWitness& w);

// Central elements X, Y, Z of Pi(A~_n) and the relation XY = Z^{n+1}.
struct CenterReport {
  NCPoly X, Y, Z;
  bool commutes_with_all_arrows = false;
  Member xy_equals_Zpow = Member::UnknownAtCap;
  bool stabilized = false;
};
CenterReport center_elements(int n);

}  // namespace qdga

#endif
