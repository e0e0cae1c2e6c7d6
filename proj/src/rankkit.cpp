#include "salemlat/rankkit.hpp"

namespace salemlat {

namespace {

/// c with w == c·v, if any.
std::optional<Integer> multiple_of(const IntVector& w, const IntVector& v) {
  Index pivot = -1;
  for (Index k = 0; k < v.size() && pivot < 0; ++k) {
    if (v(k) != 0) pivot = k;
  }
  if (pivot < 0 || w(pivot) % v(pivot) != 0) return std::nullopt;
  const Integer c = w(pivot) / v(pivot);
  if (w != IntVector(c * v)) return std::nullopt;
  return c;
}

}  // namespace

UnipotentCoordinates parabolic_coordinates(const LatticeIsometry& g, const GramLattice& l) {
  if (!(g.lattice() == l)) throw PreconditionError("isometry acts on a different lattice");
  if (classify(l) != LatticeClass::Parabolic) throw UnsupportedSignatureError("lattice is not parabolic");
  const RadicalQuotient rq = reduce_by_radical(l);
  const IntVector& v = rq.radical_generator;
  const IntMatrix& m = g.matrix();

  UnipotentCoordinates out;
  const IntVector gv = m * v;
  if (gv == v) {
    out.sign = 1;
  } else if (gv == IntVector(-v)) {
    out.sign = -1;
  } else {
    throw QuotientActionError("isometry does not map the radical generator to ±itself");
  }
  const Index r = rq.complement.rows();
  out.vector.resize(r);
  for (Index i = 0; i < r; ++i) {
    const IntVector u = rq.complement.row(i).transpose();
    auto c = multiple_of(IntVector(m * u - u), v);
    if (!c) throw QuotientActionError("isometry moves complement vector " + std::to_string(i) + " off its radical coset");
    out.vector(i) = *c;
  }
  return out;
}

Index parabolic_group_rank(const std::vector<LatticeIsometry>& generators, const GramLattice& l) {
  std::vector<IntVector> images;
  images.reserve(generators.size());
  for (const auto& g : generators) images.push_back(parabolic_coordinates(g, l).vector);
  return abelian_rank_of_image(images);
}

Index abelian_rank_of_image(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  const Index k = vectors.front().size();
  IntMatrix rows(static_cast<Index>(vectors.size()), k);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != k) throw PreconditionError("vectors have different lengths");
    rows.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return row_rank(rows);
}

}  // namespace salemlat
