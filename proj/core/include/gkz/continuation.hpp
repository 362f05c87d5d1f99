#pragma once

#include "gkz/series.hpp"

namespace gkz {

// Quadrature and truncation knobs shared by the continuation operators.
struct ContourPolicy {
  Int bound = 12;           // series truncation in the max-norm
  int nodes = 64;           // trapezoid nodes per contour (doubled for the check)
  double tolerance = 1e-6;  // diagram agreement tolerance
  double quad_tol = 1e-10;  // allowed change under node doubling
  bool negative_control = false;  // flip the kernel sign on the MB side only
};

struct RootPoint {
  Rat angle;  // t = e^{2 pi i angle}, angle in [0,1)
  cplx t;
};

// Everything the flip needs: the circuit, both essential-cone families, the
// common refinement fan, the contour roots with exact angles, and the sector
// correspondence between the two Box sets.
struct FlipContext {
  const Triangulation* T_plus = nullptr;
  const Triangulation* T_minus = nullptr;
  Circuit circuit;
  EssentialCones ess_plus, ess_minus;
  HatFan hat;

  Int order = 1;                 // M: all relevant roots are M-th roots of unity
  std::vector<RootPoint> roots;  // the global root set, sorted by angle
  double radius = 0;             // shared contour radius

  std::vector<BoxElement> box_plus, box_minus;
  std::vector<bool> essential_plus, essential_minus;
  // per plus sector: exact angles of the roots attached to it
  std::vector<std::vector<Rat>> root_angles;
  // per plus sector and global root index: matched minus sector, or -1
  std::vector<std::vector<int>> sector_of_root;
};

FlipContext build_flip_context(const Triangulation& T_plus, const Triangulation& T_minus);

// The piecewise-linear truncation offsets attached to a circuit direction.
Int m_plus(const FlipContext& ctx, const IVec& l, const QVec& gamma_v);
Int m_minus(const FlipContext& ctx, const IVec& l, const QVec& gamma_v, const Rat& t_angle);

// Integration kernel, scalar and sector-operator versions.
cplx kernel_T(const FlipContext& ctx, const std::vector<cplx>& r, cplx t_hat);
CMat kernel_T(const FlipContext& ctx, const KSector& s, cplx t_hat, bool flip_sign = false);

// The circuit halves annihilate the unit on their own side; verified before
// the phi-term of the continuation formula is dropped.
void check_circuit_annihilation(const FlipContext& ctx, const KRing& K_plus,
                                const KRing& K_minus, double tol = 1e-10);

struct MBResult {
  std::vector<CVec> sector;  // per plus sector
  CVec total;
  double tail = 0;         // worst series tail estimate encountered
  double quad_defect = 0;  // worst change under node doubling
};

// Analytic continuation of the operator-valued series applied to the unit,
// evaluated at z on the minus side.
MBResult mb_continue(const FlipContext& ctx, const KRing& K_plus,
                     const ExponentChoice& choice_plus, const ZPoint& z,
                     const ContourPolicy& policy);

// Image of the monomial class prod_j R_j^{m_j} of the minus ring, via the
// closed-form kernel transform on the plus ring.
CVec fm_apply(const FlipContext& ctx, const KRing& K_plus, const IVec& m,
              const ContourPolicy& policy);

// The same class through the common refinement: the residue representation of
// the powers of the extra generator, pushed down by the power-series identity.
// Verifies the residue representation on the refinement ring itself first.
CVec fm_oracle(const FlipContext& ctx, const KRing& K_plus, const KRing& K_hat,
               const IVec& m, const ContourPolicy& policy);

struct FMSeriesResult {
  CVec total;              // in the plus ring coordinates
  double tail = 0;         // series truncation tail
  double quad_defect = 0;  // worst change under node doubling
  std::vector<IVec> monomials;  // expansion basis actually used
};

// Image of the minus-side series class: expand it in monomial classes of the
// minus ring and map each monomial by the kernel transform.
FMSeriesResult fm_on_series(const FlipContext& ctx, const KRing& K_plus,
                            const KRing& K_minus, const ExponentChoice& choice_minus,
                            const ZPoint& z, const ContourPolicy& policy);

struct SampleReport {
  ZPoint z;
  double delta = 0;  // max-norm difference of the two sides
  std::vector<double> sector_delta;
  double mb_tail = 0, fm_tail = 0, quad_defect = 0;
};

struct DiagramReport {
  bool pass = false;
  double tolerance = 0;
  Int order = 1;
  std::vector<SampleReport> samples;
};

// Exhaustive check of the combinatorial exchange lemmas on the lattice box
// |l| <= bound: the non-essential parts of the two supports coincide whenever
// the trivial root is attached (otherwise the plus support is all essential),
// the essential supports hit the same h-lines for every attached root, and
// membership along a line is cut off exactly at m_plus / m_minus.
struct LemmaReport {
  Int bound = 0;
  long lattice_points = 0;
  bool exchange = false;
  bool projection = false;
  bool cutoff = false;
  bool pass() const { return exchange && projection && cutoff; }
};

LemmaReport check_flip_lemmas(const FlipContext& ctx, const IVec& beta, const Int& bound);

DiagramReport verify_diagram(const FlipContext& ctx, const KRing& K_plus,
                             const KRing& K_minus, const IVec& beta,
                             const std::vector<ZPoint>& samples,
                             const ContourPolicy& policy);

}  // namespace gkz
