#ifndef QK_PROPAGATOR_HPP
#define QK_PROPAGATOR_HPP

#include <memory>

#include "qk/rotor.hpp"
#include "qk/types.hpp"

namespace qk {

// One-step subsystem map. apply_left advances the row index of a bipartite
// coefficient matrix (C <- U C), apply_right the column index (C <- C U^T).
class Propagator {
  public:
    virtual ~Propagator() = default;
    virtual int dim() const = 0;
    virtual void apply(Vector& psi) const = 0;
    virtual void apply_left(Matrix& coeffs) const = 0;
    virtual void apply_right(Matrix& coeffs) const = 0;
    virtual Matrix dense() const = 0;
    // max deviation from unitarity the representation admits
    virtual double unitarity_defect() const = 0;
};

class DensePropagator final : public Propagator {
  public:
    explicit DensePropagator(Matrix u);
    int dim() const override { return static_cast<int>(u_.rows()); }
    void apply(Vector& psi) const override;
    void apply_left(Matrix& coeffs) const override;
    void apply_right(Matrix& coeffs) const override;
    Matrix dense() const override { return u_; }
    double unitarity_defect() const override;

  private:
    Matrix u_;
};

// Split-step rotor map: diagonal kick in position, diagonal free evolution
// in momentum, unitary DFTs in between.
class SplitStepPropagator final : public Propagator {
  public:
    explicit SplitStepPropagator(const RotorParams& params);
    int dim() const override { return params_.n; }
    void apply(Vector& psi) const override;
    void apply_left(Matrix& coeffs) const override;
    void apply_right(Matrix& coeffs) const override;
    Matrix dense() const override;
    double unitarity_defect() const override;

  private:
    RotorParams params_;
    Vector kick_, free_;
};

}  // namespace qk

#endif
