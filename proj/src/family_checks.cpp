#include "bdg/family_checks.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace bdg {

namespace {

// 2x2 matrices mod p for the <n1,n2> action.
struct Mat2p {
  std::uint64_t e00, e01, e10, e11;

  static Mat2p identity() { return {1, 0, 0, 1}; }
  Mat2p mul(const Mat2p& o, std::uint64_t p) const {
    return {(e00 * o.e00 + e01 * o.e10) % p, (e00 * o.e01 + e01 * o.e11) % p,
            (e10 * o.e00 + e11 * o.e10) % p, (e10 * o.e01 + e11 * o.e11) % p};
  }
  Mat2p pow(std::uint64_t e, std::uint64_t p) const {
    Mat2p r = identity();
    Mat2p base = *this;
    while (e > 0) {
      if (e & 1) r = r.mul(base, p);
      base = base.mul(base, p);
      e >>= 1;
    }
    return r;
  }
  bool operator==(const Mat2p&) const = default;
};

std::string word_or_count(std::uint64_t n) { return std::to_string(n); }

}  // namespace

void VerificationReport::add(std::string name, std::string expected, std::string actual) {
  bool passed = expected == actual;
  overall = overall && passed;
  checks.push_back({std::move(name), std::move(expected), std::move(actual), passed});
}

void VerificationReport::add_bool(std::string name, bool passed) {
  overall = overall && passed;
  checks.push_back({std::move(name), "true", passed ? "true" : "false", passed});
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ActionMatrices build_action_matrices(std::uint32_t p) {
  FamilyGroup g{GroupParams{p}};
  return action_matrices(g);
}

ActionMatrices action_matrices(const FamilyGroup& g) {
  return {g.xa_matrix(), g.ya_matrix(), g.xb_matrix(), g.yb_matrix()};
}

VerificationReport verify_presentation(const FamilyGroup& g) {
  return verify_presentation(g, [&g](const GroupElement& u, const GroupElement& v) {
    return g.multiply(u, v);
  });
}

VerificationReport verify_presentation(const FamilyGroup& g, const MulFn& mul) {
  const std::uint32_t p = g.p();
  VerificationReport report;

  auto eval_word = [&](const std::vector<GroupElement>& word) {
    GroupElement acc = g.identity();
    for (const auto& w : word) acc = mul(acc, w);
    return to_word_string(g, acc);
  };

  const GroupElement z = g.gen_z();

  // All generators of E are involutions, so each relator below is written as
  // a positive word.
  for (std::uint32_t i = 1; i < p; ++i) {
    GroupElement x = g.gen_x(i);
    GroupElement y = g.gen_y(i);
    report.add("x" + std::to_string(i) + "^2 = 1", "1", eval_word({x, x}));
    report.add("y" + std::to_string(i) + "^2 = 1", "1", eval_word({y, y}));
  }
  report.add("z^2 = 1", "1", eval_word({z, z}));
  for (std::uint32_t i = 1; i < p; ++i) {
    GroupElement x = g.gen_x(i);
    GroupElement y = g.gen_y(i);
    report.add("[x" + std::to_string(i) + ",z] = 1", "1", eval_word({x, z, x, z}));
    report.add("[y" + std::to_string(i) + ",z] = 1", "1", eval_word({y, z, y, z}));
  }
  for (std::uint32_t i = 1; i < p; ++i) {
    for (std::uint32_t j = i + 1; j < p; ++j) {
      GroupElement xi = g.gen_x(i), xj = g.gen_x(j);
      GroupElement yi = g.gen_y(i), yj = g.gen_y(j);
      report.add("[x" + std::to_string(i) + ",x" + std::to_string(j) + "] = 1", "1",
                 eval_word({xi, xj, xi, xj}));
      report.add("[y" + std::to_string(i) + ",y" + std::to_string(j) + "] = 1", "1",
                 eval_word({yi, yj, yi, yj}));
    }
  }
  for (std::uint32_t i = 1; i < p; ++i) {
    for (std::uint32_t j = 1; j < p; ++j) {
      if (i == j) continue;
      GroupElement x = g.gen_x(i), y = g.gen_y(j);
      report.add("[x" + std::to_string(i) + ",y" + std::to_string(j) + "] = 1", "1",
                 eval_word({x, y, x, y}));
    }
  }
  for (std::uint32_t i = 1; i < p; ++i) {
    GroupElement x = g.gen_x(i), y = g.gen_y(i);
    report.add("[x" + std::to_string(i) + ",y" + std::to_string(i) + "] = z", "z",
               eval_word({x, y, x, y}));
  }

  // |E| by closing the E-generators under mul. E-part elements pack into
  // 2p-1 bits, so a flat bitmap serves as the seen-set.
  if (p <= 7) {
    auto pack = [p](const GroupElement& u) -> std::uint32_t {
      return (static_cast<std::uint32_t>(u.x_bits.lo) << p) |
             (static_cast<std::uint32_t>(u.y_bits.lo) << 1) | u.z_exp;
    };
    std::vector<GroupElement> gens;
    for (std::uint32_t i = 1; i < p; ++i) gens.push_back(g.gen_x(i));
    for (std::uint32_t i = 1; i < p; ++i) gens.push_back(g.gen_y(i));
    gens.push_back(z);

    std::vector<bool> seen(std::uint64_t{1} << (2 * p - 1), false);
    std::vector<GroupElement> frontier{g.identity()};
    seen[pack(g.identity())] = true;
    std::uint64_t count = 1;
    while (!frontier.empty()) {
      GroupElement u = frontier.back();
      frontier.pop_back();
      for (const auto& h : gens) {
        GroupElement w = mul(u, h);
        std::uint32_t k = pack(w);
        if (!seen[k]) {
          seen[k] = true;
          ++count;
          frontier.push_back(w);
        }
      }
    }
    report.add("|E| = 2^(2p-1)", word_or_count(g.e_order()), word_or_count(count));
  }

  return report;
}

VerificationReport verify_dihedral_action(std::uint32_t p) {
  GroupParams params{p};  // validates p
  return verify_dihedral_action(build_action_matrices(p), p);
}

VerificationReport verify_dihedral_action(const ActionMatrices& m, std::uint32_t p) {
  VerificationReport report;
  const Gf2Matrix id = Gf2Matrix::identity(p - 1);

  report.add_bool("Xa invertible", m.xa.invertible());
  report.add_bool("Ya invertible", m.ya.invertible());
  report.add_bool("Xb invertible", m.xb.invertible());
  report.add_bool("Yb invertible", m.yb.invertible());

  report.add_bool("a^p = 1 on x-block", m.xa.pow(p) == id);
  report.add_bool("a^p = 1 on y-block", m.ya.pow(p) == id);
  report.add_bool("b^2 = 1 on x-block", m.xb * m.xb == id);
  report.add_bool("b^2 = 1 on y-block", m.yb * m.yb == id);
  // matrix of ab is Xb Xa (apply a first, then b)
  Gf2Matrix xab = m.xb * m.xa;
  Gf2Matrix yab = m.yb * m.ya;
  report.add_bool("(ab)^2 = 1 on x-block", xab * xab == id);
  report.add_bool("(ab)^2 = 1 on y-block", yab * yab == id);

  // Dihedral relations for the <n1,n2> action mod p.
  const Mat2p na{1, 1, 0, 1};
  const Mat2p nb{1, 0, 0, p - 1};
  const Mat2p id2 = Mat2p::identity();
  report.add_bool("a^p = 1 on <n1,n2>", na.pow(p, p) == id2);
  report.add_bool("b^2 = 1 on <n1,n2>", nb.mul(nb, p) == id2);
  Mat2p nab = nb.mul(na, p);
  report.add_bool("(ab)^2 = 1 on <n1,n2>", nab.mul(nab, p) == id2);

  // Symplectic preservation: T^t J T = J is the uniform version of the
  // generator-by-generator commutator checks [g^T, h^T] = [g, h]^T.
  const Gf2Matrix j = Gf2Matrix::symplectic_gram(p - 1);
  Gf2Matrix ta = Gf2Matrix::block_diagonal(m.xa, m.ya);
  Gf2Matrix tb = Gf2Matrix::block_diagonal(m.xb, m.yb);
  report.add_bool("a preserves symplectic form", ta.transposed() * j * ta == j);
  report.add_bool("b preserves symplectic form", tb.transposed() * j * tb == j);

  return report;
}

namespace {

std::uint32_t fixed_space_dimension(const Gf2Matrix& t) {
  Gf2Matrix shifted = t + Gf2Matrix::identity(t.rows());
  return shifted.kernel_dimension();
}

}  // namespace

std::uint32_t fixed_space_of_a(std::uint32_t p) {
  ActionMatrices m = build_action_matrices(p);
  return fixed_space_dimension(Gf2Matrix::block_diagonal(m.xa, m.ya));
}

std::uint32_t fixed_space_of_b(std::uint32_t p) {
  ActionMatrices m = build_action_matrices(p);
  return fixed_space_dimension(Gf2Matrix::block_diagonal(m.xb, m.yb));
}

}  // namespace bdg
