#pragma once

#include <string>
#include <vector>

#include "commutant/chain.hpp"

namespace commutant {

namespace detail {

inline int levi_civita(int i, int j, int k) {
  // 1-based indices in {1,2,3}
  if (i == j || j == k || i == k) return 0;
  return ((i - j) * (j - k) * (k - i)) / 2;
}

/// su(3) in the Elliott basis: angular momenta l1..l3 plus the symmetric
/// traceless tensor t11,t12,t13,t22,t23 (t33 = -t11-t22, t_jk = t_kj).
inline ChainSpec make_elliott() {
  std::vector<std::string> names = {"l1", "l2", "l3", "t11",
                                    "t12", "t13", "t22", "t23"};
  LieAlgebraSpec alg("elliott su(3) > so(3)", names);
  const GaussianRational I = GaussianRational::i();

  // independent t components, 1-based pairs
  const std::pair<int, int> tpairs[5] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}};
  auto tindex = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (int t = 0; t < 5; ++t)
      if (tpairs[t] == std::make_pair(a, b)) return t + 3;
    return -1;  // (3,3)
  };
  // expands t_ab into stored coordinates; t33 = -t11 - t22
  auto add_t = [&](int i, int j, int a, int b, GaussianRational c) {
    int t = tindex(a, b);
    if (t >= 0) {
      alg.add_bracket_term(i, j, t, c);
    } else {
      alg.add_bracket_term(i, j, 3, -c);
      alg.add_bracket_term(i, j, 6, -c);
    }
  };

  // {l_i, l_j} = i eps_ijk l_k
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        if (int e = levi_civita(i, j, k))
          alg.add_bracket_term(i - 1, j - 1, k - 1,
                               I * GaussianRational(e));

  // {l_i, t_jk} = i eps_ijl t_kl + i eps_ikl t_jl
  for (int i = 1; i <= 3; ++i) {
    for (int t = 0; t < 5; ++t) {
      auto [j, k] = tpairs[t];
      for (int l = 1; l <= 3; ++l) {
        if (int e = levi_civita(i, j, l))
          add_t(i - 1, t + 3, k, l, I * GaussianRational(e));
        if (int e = levi_civita(i, k, l))
          add_t(i - 1, t + 3, j, l, I * GaussianRational(e));
      }
    }
  }

  // {t_ij, t_kl} = i (d_ki e_jlm + d_li e_jkm + d_kj e_ilm + d_lj e_ikm) l_m
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      auto [i, j] = tpairs[a];
      auto [k, l] = tpairs[b];
      for (int m = 1; m <= 3; ++m) {
        int co = (k == i ? levi_civita(j, l, m) : 0) +
                 (l == i ? levi_civita(j, k, m) : 0) +
                 (k == j ? levi_civita(i, l, m) : 0) +
                 (l == j ? levi_civita(i, k, m) : 0);
        if (co)
          alg.add_bracket_term(a + 3, b + 3, m - 1, I * GaussianRational(co));
      }
    }
  }
  return ChainSpec(std::move(alg), {0, 1, 2});
}

/// so(5) > su(2) x u(1), the seniority chain. The basis is the root-ladder
/// one behind the paper's generator names: su(2) ladder {u-,u+,u3}, the u(1)
/// charge v3, and two spin-1 triplets (s+,v+,t+) / (t-,v-,s-) of charge +-1.
/// Normalized so that the quadratic Casimir equals a1^2 + b1 + b2 on the
/// canonical invariant rows.
inline ChainSpec make_seniority() {
  std::vector<std::string> names = {"sm", "tm", "um", "vm", "sp",
                                    "tp", "up", "vp", "u3", "v3"};
  LieAlgebraSpec alg("seniority so(5) > su(2) x u(1)", names);
  enum { SM, TM, UM, VM, SP, TP, UP, VP, U3, V3 };
  struct Row {
    int i, j, k;
    long num;
  };
  // derived from the 5x5 antisymmetric-matrix realization (triplet scale 1/2)
  const Row rows[] = {
      {SM, SP, U3, -2}, {SM, SP, V3, -2}, {SM, UP, VM, -2}, {SM, VP, UM, -1},
      {SM, U3, SM, 1},  {SM, V3, SM, 1},  {TM, UM, VM, -2}, {TM, TP, U3, 2},
      {TM, TP, V3, -2}, {TM, VP, UP, -1}, {TM, U3, TM, -1}, {TM, V3, TM, 1},
      {UM, VM, SM, 1},  {UM, SP, VP, 2},  {UM, UP, U3, -2}, {UM, VP, TP, 1},
      {UM, U3, UM, 1},  {VM, SP, UP, 1},  {VM, TP, UM, 1},  {VM, UP, TM, -1},
      {VM, VP, V3, 1},  {VM, V3, VM, 1},  {SP, U3, SP, -1}, {SP, V3, SP, -1},
      {TP, UP, VP, -2}, {TP, U3, TP, 1},  {TP, V3, TP, -1}, {UP, VP, SP, 1},
      {UP, U3, UP, -1}, {VP, V3, VP, -1},
  };
  for (const auto& r : rows)
    alg.add_bracket_term(r.i, r.j, r.k, GaussianRational(r.num));
  return ChainSpec(std::move(alg), {UM, UP, U3, V3});
}

/// su(4) > su(2) x su(2), the Wigner supermultiplet chain: spin s_i, isospin
/// t_a, and the bispin tensor q_ia.
inline ChainSpec make_supermultiplet() {
  std::vector<std::string> names = {"s1", "s2", "s3", "t1", "t2", "t3"};
  for (int i = 1; i <= 3; ++i)
    for (int a = 1; a <= 3; ++a)
      names.push_back("q" + std::to_string(i) + std::to_string(a));
  LieAlgebraSpec alg("supermultiplet su(4) > su(2) x su(2)", names);
  const GaussianRational I = GaussianRational::i();
  auto qi = [](int i, int a) { return 6 + 3 * (i - 1) + (a - 1); };

  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        if (int e = levi_civita(i, j, k)) {
          alg.add_bracket_term(i - 1, j - 1, k - 1, I * GaussianRational(e));
          alg.add_bracket_term(3 + i - 1, 3 + j - 1, 3 + k - 1,
                               I * GaussianRational(e));
        }
      }
    }
  }
  // {s_i, q_ja} = i eps_ijk q_ka ; {t_a, q_ib} = i eps_abg q_ig
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int a = 1; a <= 3; ++a)
        for (int k = 1; k <= 3; ++k)
          if (int e = levi_civita(i, j, k))
            alg.add_bracket_term(i - 1, qi(j, a), qi(k, a),
                                 I * GaussianRational(e));
  for (int a = 1; a <= 3; ++a)
    for (int i = 1; i <= 3; ++i)
      for (int b = 1; b <= 3; ++b)
        for (int g = 1; g <= 3; ++g)
          if (int e = levi_civita(a, b, g))
            alg.add_bracket_term(3 + a - 1, qi(i, b), qi(i, g),
                                 I * GaussianRational(e));
  // {q_ia, q_jb} = (i/4)(d_ab eps_ijk s_k + d_ij eps_abg t_g)
  const GaussianRational I4 = GaussianRational::imag_ratio(1, 4);
  for (int i = 1; i <= 3; ++i)
    for (int a = 1; a <= 3; ++a)
      for (int j = 1; j <= 3; ++j)
        for (int b = 1; b <= 3; ++b) {
          if (qi(i, a) >= qi(j, b)) continue;
          for (int k = 1; k <= 3; ++k) {
            if (a == b)
              if (int e = levi_civita(i, j, k))
                alg.add_bracket_term(qi(i, a), qi(j, b), k - 1,
                                     I4 * GaussianRational(e));
            if (i == j)
              if (int e = levi_civita(a, b, k))
                alg.add_bracket_term(qi(i, a), qi(j, b), 3 + k - 1,
                                     I4 * GaussianRational(e));
          }
        }
  return ChainSpec(std::move(alg), {0, 1, 2, 3, 4, 5});
}

/// so(5) > so(3), the surfon chain: principal so(3) {l0,l1,l-1} acting on a
/// spin-3 septet q3..q-3. Real structure constants, transcribed from the
/// commutator table (the duplicated [q3,q2]=0 entry deduplicated).
inline ChainSpec make_surfon() {
  std::vector<std::string> names = {"l0", "l1", "lm1", "q3", "q2",
                                    "q1", "q0", "qm1", "qm2", "qm3"};
  LieAlgebraSpec alg("surfon so(5) > so(3)", names);
  enum { L0, L1, LM1, Q3, Q2, Q1, Q0, QM1, QM2, QM3 };
  struct Row {
    int i, j, k;
    long num;
  };
  const Row rows[] = {
      {L0, LM1, LM1, -1}, {L0, L1, L1, 1},    {L1, LM1, L0, 2},
      {L0, Q3, Q3, 3},    {L0, Q2, Q2, 2},    {L0, Q1, Q1, 1},
      {L0, QM1, QM1, -1}, {L0, QM2, QM2, -2}, {L0, QM3, QM3, -3},
      {L1, Q2, Q3, 6},    {L1, Q1, Q2, 1},    {L1, Q0, Q1, 2},
      {L1, QM1, Q0, 6},   {L1, QM2, QM1, 10}, {L1, QM3, QM2, 1},
      {LM1, Q3, Q2, 1},   {LM1, Q2, Q1, 10},  {LM1, Q1, Q0, 6},
      {LM1, Q0, QM1, 2},  {LM1, QM1, QM2, 1}, {LM1, QM2, QM3, 6},
      {Q3, Q0, Q3, 1},    {Q3, QM1, Q2, 1},   {Q3, QM2, Q1, 10},
      {Q3, QM2, L1, 15},  {Q3, QM3, Q0, 5},   {Q3, QM3, L0, -15},
      {Q2, Q1, Q3, -6},   {Q2, Q0, Q2, -1},   {Q2, QM1, L1, -15},
      {Q2, QM2, Q0, 30},  {Q2, QM2, L0, 60},  {Q2, QM3, QM1, 10},
      {Q2, QM3, LM1, -15},
      {Q1, Q0, L1, 3},    {Q1, Q0, Q1, -1},   {Q1, QM1, L0, -3},
      {Q1, QM1, Q0, -3},  {Q1, QM2, LM1, 15}, {Q1, QM3, QM2, 1},
      {Q0, QM1, QM1, -1}, {Q0, QM1, LM1, -3}, {Q0, QM2, QM2, -1},
      {Q0, QM3, QM3, 1},  {QM1, QM2, QM3, -6},
  };
  for (const auto& r : rows)
    alg.add_bracket_term(r.i, r.j, r.k, GaussianRational(r.num));
  return ChainSpec(std::move(alg), {L0, L1, LM1});
}

}  // namespace detail

inline std::vector<std::string> builtin_chain_names() {
  return {"elliott", "seniority", "supermultiplet", "surfon"};
}

/// The four paper chains, by name. Throws ParseError on unknown names.
inline ChainSpec builtin_chain(const std::string& name) {
  if (name == "elliott") return detail::make_elliott();
  if (name == "seniority") return detail::make_seniority();
  if (name == "supermultiplet") return detail::make_supermultiplet();
  if (name == "surfon") return detail::make_surfon();
  throw ParseError("unknown-chain", "no builtin chain named '" + name + "'");
}

}  // namespace commutant
