#include "curvecal/intersection.hpp"

#include <sstream>
#include <utility>

#include "curvecal/checked.hpp"
#include "curvecal/detail/matching.hpp"
#include "curvecal/error.hpp"

namespace curvecal {

namespace {

void same_genus(const CurveWord& l, const CurveWord& g) {
  if (l.genus() != g.genus()) {
    throw GenusError("words live on surfaces of genus " + std::to_string(l.genus()) + " and " +
                     std::to_string(g.genus()));
  }
}

std::int64_t det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return checked::sub(checked::mul(a, d), checked::mul(b, c));
}

}  // namespace

std::int64_t pairing(const AbelianCoords& l, const AbelianCoords& g) {
  if (l.genus != g.genus) throw GenusError("pairing of coordinates with different genus");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < l.m.size(); ++i) {
    acc = checked::add(acc, det2(l.m[i], l.n[i], g.m[i], g.n[i]));
  }
  return acc;
}

std::int64_t pairing(const CurveWord& l, const CurveWord& g) {
  same_genus(l, g);
  return pairing(abelianize(l), abelianize(g));
}

MuCoords mu_coords(const CurveWord& l) {
  AbelianCoords c = abelianize(l);
  MuCoords mu;
  mu.dot_beta = c.m;
  mu.dot_alpha.reserve(c.n.size());
  for (auto v : c.n) mu.dot_alpha.push_back(checked::neg(v));
  return mu;
}

std::int64_t degree_lower_bound(const CurveWord& l, const CurveWord& g) {
  same_genus(l, g);
  MuCoords a = mu_coords(l);
  MuCoords b = mu_coords(g);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.dot_alpha.size(); ++i) {
    std::int64_t d = det2(a.dot_beta[i], checked::neg(a.dot_alpha[i]), b.dot_beta[i],
                          checked::neg(b.dot_alpha[i]));
    acc = checked::add(acc, checked::abs(d));
  }
  return acc;
}

std::string linear_expression(const CurveWord& l) {
  MuCoords mu = mu_coords(l);
  std::string out;
  auto term = [&out](std::int64_t coeff, char letter, std::size_t i) {
    if (coeff == 0) return;
    std::int64_t mag = coeff;
    if (out.empty()) {
      if (coeff < 0) out += '-';
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (mag < 0) mag = -mag;
    out += std::to_string(mag) + '*' + letter + std::to_string(i + 1);
  };
  for (std::size_t i = 0; i < mu.dot_beta.size(); ++i) term(mu.dot_beta[i], 'a', i);
  for (std::size_t i = 0; i < mu.dot_alpha.size(); ++i) {
    term(checked::neg(mu.dot_alpha[i]), 'b', i);
  }
  return out.empty() ? "0" : out;
}

BasisCandidate::BasisCandidate(int k, std::vector<CurveWord> th, std::vector<CurveWord> ga)
    : genus(k), theta(std::move(th)), gamma(std::move(ga)) {
  if (k < 1) throw GenusError("genus must be at least 1");
  if (theta.size() != static_cast<std::size_t>(k) || gamma.size() != static_cast<std::size_t>(k)) {
    throw Error("basis candidate of genus " + std::to_string(k) + " needs " + std::to_string(k) +
                " theta and gamma words, got " + std::to_string(theta.size()) + " and " +
                std::to_string(gamma.size()));
  }
  for (const auto* list : {&theta, &gamma}) {
    for (const CurveWord& w : *list) {
      if (w.genus() != k) throw GenusError("basis word '" + render(w) + "' has wrong genus");
    }
  }
}

BasisCandidate BasisCandidate::canonical(int k) {
  std::vector<CurveWord> th;
  std::vector<CurveWord> ga;
  for (int i = 1; i <= k; ++i) {
    th.push_back(CurveWord::alpha(k, i));
    ga.push_back(CurveWord::beta(k, i));
  }
  return BasisCandidate(k, std::move(th), std::move(ga));
}

BasisMatrix basis_matrix(const BasisCandidate& c) {
  const auto k = static_cast<std::size_t>(c.genus);
  IntMatrix h(2 * k, 2 * k);
  auto fill_row = [&](std::size_t r, const CurveWord& x) {
    for (std::size_t i = 0; i < k; ++i) {
      const int idx = static_cast<int>(i) + 1;
      h(r, i) = pairing(x, CurveWord::beta(c.genus, idx));
      h(r, k + i) = checked::neg(pairing(x, CurveWord::alpha(c.genus, idx)));
    }
  };
  for (std::size_t j = 0; j < k; ++j) {
    fill_row(j, c.theta[j]);
    fill_row(k + j, c.gamma[j]);
  }
  return make_basis_matrix(c.genus, std::move(h));
}

BasisMatrix make_basis_matrix(int genus, IntMatrix h) {
  if (genus < 1) throw GenusError("genus must be at least 1");
  const auto n = 2 * static_cast<std::size_t>(genus);
  if (h.rows() != n || h.cols() != n) {
    throw Error("basis matrix of genus " + std::to_string(genus) + " must be " +
                std::to_string(n) + "x" + std::to_string(n));
  }
  std::int64_t d = determinant(h);
  return BasisMatrix{genus, std::move(h), d};
}

IntMatrix reverse_basis_matrix(const BasisCandidate& c) {
  const auto k = static_cast<std::size_t>(c.genus);
  IntMatrix r(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    const int idx = static_cast<int>(i) + 1;
    const CurveWord a = CurveWord::alpha(c.genus, idx);
    const CurveWord b = CurveWord::beta(c.genus, idx);
    for (std::size_t j = 0; j < k; ++j) {
      r(i, j) = pairing(a, c.gamma[j]);
      r(i, k + j) = checked::neg(pairing(a, c.theta[j]));
      r(k + i, j) = pairing(b, c.gamma[j]);
      r(k + i, k + j) = checked::neg(pairing(b, c.theta[j]));
    }
  }
  return r;
}

BasisVerdict verify_basis(const BasisMatrix& bm) {
  const auto k = static_cast<std::size_t>(bm.genus);
  const IntMatrix& h = bm.h;
  BasisVerdict v;
  v.det = determinant(h);
  v.unimodular = v.det == 1 || v.det == -1;
  if (v.det != bm.det) {
    v.unimodular = false;
    v.diagnostics = "stored determinant " + std::to_string(bm.det) + " differs from det H = " +
                    std::to_string(v.det);
    return v;
  }
  if (!v.unimodular) {
    v.diagnostics = "det H = " + std::to_string(v.det) + ", not +-1";
    return v;
  }

  // ok[i][j]: candidate pair j is supported on canonical index i alone and
  // its 2x2 block there is unimodular.
  auto block_det = [&](std::size_t i, std::size_t j) {
    return det2(h(j, i), h(j, k + i), h(k + j, i), h(k + j, k + i));
  };
  std::vector<std::vector<bool>> ok(k, std::vector<bool>(k, false));
  std::string first_problem;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < k; ++i) {
      if (h(j, i) != 0 || h(j, k + i) != 0 || h(k + j, i) != 0 || h(k + j, k + i) != 0) {
        support.push_back(i);
      }
    }
    if (support.size() != 1) {
      if (first_problem.empty()) {
        std::ostringstream os;
        os << "candidate pair " << j + 1 << " has nonzero pairings with " << support.size()
           << " canonical indices";
        first_problem = os.str();
      }
      continue;
    }
    const std::size_t i = support.front();
    const std::int64_t d = block_det(i, j);
    if (d != 1 && d != -1) {
      if (first_problem.empty()) {
        first_problem = "block of candidate pair " + std::to_string(j + 1) + " at index " +
                        std::to_string(i + 1) + " has determinant " + std::to_string(d);
      }
      continue;
    }
    ok[i][j] = true;
  }

  auto matched = detail::perfect_matching(ok);
  if (!matched) {
    v.diagnostics = first_problem.empty() ? "no block permutation exists" : first_problem;
    return v;
  }
  const std::vector<int>& row_of_col = *matched;
  for (std::size_t i = 0; i < k; ++i) {
    v.block_dets.push_back(block_det(i, static_cast<std::size_t>(row_of_col[i])));
  }
  v.block_permutation = row_of_col;
  v.diagnostics = "unimodular; block permutation found";
  return v;
}

}  // namespace curvecal
