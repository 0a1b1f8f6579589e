// Copyright 2026 The GCSA-NA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcsa/selftest.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "gcsa/errors.hpp"
#include "gcsa/gcsa_na.hpp"
#include "gcsa/ps_baseline.hpp"
#include "gcsa/rng.hpp"
#include "gcsa/simulator.hpp"
#include "gcsa/strassen_na.hpp"

namespace gcsa {

namespace {

FieldMatrix scalar(const PrimeField& f, Elem v) { return FieldMatrix(f, 1, 1, {v}); }

SchemeShape unit_shape(std::size_t servers, std::size_t colluding) {
  SchemeShape s;
  s.servers = servers;
  s.colluding = colluding;
  return s;
}

template <typename F>
CheckResult guarded(const char* name, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

CheckResult check_master_privacy() {
  return guarded("master privacy (GF(5), exhaustive)", [] {
    const PrimeField f(5);
    const SchemeParams params = derive_params(unit_shape(3, 1), f);
    const EvalPoints points = choose_points(f, 3, 1);
    // product -> view multiset of the first input pair seen with it
    std::map<Elem, std::vector<std::vector<Elem>>> reference;
    std::size_t compared = 0;
    for (Elem a = 0; a < 5; ++a) {
      for (Elem b = 0; b < 5; ++b) {
        std::vector<std::vector<Elem>> views;
        for (Elem za = 0; za < 5; ++za) {
          for (Elem zb = 0; zb < 5; ++zb) {
            const SourceNoise sn{{scalar(f, za)}, {scalar(f, zb)}};
            const std::vector<FieldMatrix> av{scalar(f, a)}, bv{scalar(f, b)};
            const ShareBundle shares = make_shares(params, points, av, bv, sn);
            for (Elem z = 0; z < 5; ++z) {
              const NoiseBundle nb{{scalar(f, z)}, {scalar(f, 0)}};
              std::vector<Elem> view;
              for (std::size_t s = 0; s < 3; ++s) {
                view.push_back(server_answer(shares[s], noise_share(nb, params, points, s)).at(0, 0));
              }
              views.push_back(std::move(view));
            }
          }
        }
        std::sort(views.begin(), views.end());
        const Elem c = f.mul(a, b);
        auto [it, fresh] = reference.emplace(c, views);
        if (!fresh) {
          ++compared;
          if (it->second != views) {
            std::ostringstream msg;
            msg << "view distribution differs for A=" << a << " B=" << b;
            return CheckResult{"master privacy (GF(5), exhaustive)", false, msg.str()};
          }
        }
      }
    }
    return CheckResult{"master privacy (GF(5), exhaustive)", true,
                       "25 inputs x 125 noise draws, " + std::to_string(compared) +
                           " same-product comparisons"};
  });
}

CheckResult check_share_uniformity() {
  return guarded("share uniformity (GF(5), X=1)", [] {
    const PrimeField f(5);
    const SchemeParams params = derive_params(unit_shape(3, 1), f);
    const EvalPoints points = choose_points(f, 3, 1);
    for (Elem a = 0; a < 5; ++a) {
      for (Elem b = 0; b < 5; ++b) {
        std::vector<std::vector<int>> hits(3, std::vector<int>(25, 0));
        for (Elem za = 0; za < 5; ++za) {
          for (Elem zb = 0; zb < 5; ++zb) {
            const SourceNoise sn{{scalar(f, za)}, {scalar(f, zb)}};
            const std::vector<FieldMatrix> av{scalar(f, a)}, bv{scalar(f, b)};
            const ShareBundle shares = make_shares(params, points, av, bv, sn);
            for (std::size_t s = 0; s < 3; ++s) {
              ++hits[s][shares[s].a[0].at(0, 0) * 5 + shares[s].b[0].at(0, 0)];
            }
          }
        }
        for (const auto& h : hits) {
          if (std::any_of(h.begin(), h.end(), [](int n) { return n != 1; })) {
            return CheckResult{"share uniformity (GF(5), X=1)", false,
                               "non-uniform share pair for A=" + std::to_string(a) +
                                   " B=" + std::to_string(b)};
          }
        }
      }
    }
    return CheckResult{"share uniformity (GF(5), X=1)", true,
                       "every server, every input: 25 share pairs hit once each"};
  });
}

CheckResult check_collusion_rank() {
  return guarded("X-collusion rank (S<=12, X<=3)", [] {
    const PrimeField f(65537);
    std::size_t subsets = 0;
    for (std::size_t x = 1; x <= 3; ++x) {
      for (std::size_t groups = 1; groups <= 2; ++groups) {
        for (std::size_t k = 1; k <= 2; ++k) {
          SchemeShape sh = unit_shape(1, x);
          sh.groups = groups;
          sh.group_size = k;
          for (std::size_t S = 1; S <= 12; ++S) {
            sh.servers = S;
            std::optional<SchemeParams> params;
            try {
              params = derive_params(sh, f);
            } catch (const InsufficientServers&) {
              continue;
            }
            const EvalPoints points = choose_points(f, S, sh.batch());
            // All x-subsets of 0..S-1 in lexicographic order.
            std::vector<std::size_t> idx(x);
            for (std::size_t i = 0; i < x; ++i) idx[i] = i;
            while (true) {
              for (std::size_t l = 0; l < groups; ++l) {
                for (bool a_side : {true, false}) {
                  if (rank(collusion_matrix(*params, points, idx, l, a_side)) != x) {
                    return CheckResult{"X-collusion rank (S<=12, X<=3)", false,
                                       "singular collusion matrix at S=" + std::to_string(S)};
                  }
                }
              }
              ++subsets;
              std::size_t i = x;
              while (i > 0 && idx[i - 1] == S - x + i - 1) --i;
              if (i == 0) break;
              ++idx[i - 1];
              for (std::size_t j = i; j < x; ++j) idx[j] = idx[j - 1] + 1;
            }
          }
        }
      }
    }
    return CheckResult{"X-collusion rank (S<=12, X<=3)", true,
                       std::to_string(subsets) + " subsets, all full rank"};
  });
}

CheckResult check_strong_security() {
  return guarded("strong security (noise independent of inputs)", [] {
    SimConfig c;
    c.shape = SchemeShape{11, 1, 1, 2, 2, 1, 1, 2, 2, 2};
    c.modulus = 13;
    c.seed = 7;
    c.data_seed = 1;
    const SimResult r1 = run_simulation(c);
    c.data_seed = 2;
    const SimResult r2 = run_simulation(c);
    const bool inputs_differ = r1.expected != r2.expected;
    const bool same_noise = r1.noise_shares == r2.noise_shares;
    const bool ordered = r1.trace.offline_before_sharing() && r2.trace.offline_before_sharing();
    const bool pass = inputs_differ && same_noise && ordered && r1.pass() && r2.pass();
    return CheckResult{"strong security (noise independent of inputs)", pass,
                       std::string("noise identical: ") + (same_noise ? "yes" : "no") +
                           ", offline first: " + (ordered ? "yes" : "no")};
  });
}

CheckResult check_strassen() {
  return guarded("Strassen-NA (100 instances over GF(101))", [] {
    const PrimeField f(101);
    const auto scheme = strassen::strassen_bilinear();
    const FieldMatrix recon = scheme.recon_matrix(f);
    const auto design = strassen::noise_design(recon);
    if (!mat_mul(recon, design.n).is_zero() || rank(design.n) != 3) {
      return CheckResult{"Strassen-NA (100 instances over GF(101))", false,
                         "noise design does not span null(recon)"};
    }
    Rng rng(2026, streams::kDataA);
    for (std::size_t t = 0; t < 100; ++t) {
      const FieldMatrix a = FieldMatrix::random(f, 2, 2, rng);
      const FieldMatrix b = FieldMatrix::random(f, 2, 2, rng);
      const auto run = strassen::strassen_na_run(a, b, 15, 1000 + t);
      if (run.product != mat_mul(a, b)) {
        return CheckResult{"Strassen-NA (100 instances over GF(101))", false,
                           "wrong product at instance " + std::to_string(t)};
      }
    }
    return CheckResult{"Strassen-NA (100 instances over GF(101))", true,
                       "recon*N = 0, rank(N) = 3, all products correct"};
  });
}

CheckResult check_ps_toy() {
  return guarded("polynomial sharing toy (p=2, X=1)", [] {
    const PrimeField f(13);
    SchemeShape sh = unit_shape(5, 1);
    sh.inner_split = 2;
    sh.rows = sh.cols = 2;
    sh.inner = 2;
    const ps::PsInstance inst = ps::make_instance(sh, f);
    Rng rng(5, streams::kDataA);
    const FieldMatrix a = FieldMatrix::random(f, 2, 2, rng);
    const FieldMatrix b = FieldMatrix::random(f, 2, 2, rng);
    const std::vector<FieldMatrix> za{FieldMatrix::random(f, 2, 1, rng)};
    const std::vector<FieldMatrix> zb{FieldMatrix::random(f, 1, 2, rng)};
    std::vector<std::optional<FieldMatrix>> local;
    std::vector<std::vector<FieldMatrix>> noise;
    for (std::size_t s = 0; s < 5; ++s) {
      const auto share = ps::ps_share(inst, a, b, za, zb, s);
      local.emplace_back(mat_mul(share.a, share.b));
      noise.push_back({FieldMatrix::random(f, 2, 2, rng)});
    }
    const auto round = ps::ps_round(inst, local, noise);
    const std::vector<Answer> two{{3, round.aggregates[3]}, {1, round.aggregates[1]}};
    const FieldMatrix ab = mat_mul(a, b);
    const bool decoded = ps::ps_decode(inst, two) == ab;
    const bool leaked = ps::recover_from_transcript(inst, round.messages) == ab;
    return CheckResult{"polynomial sharing toy (p=2, X=1)", decoded && leaked,
                       std::string("decode from 2: ") + (decoded ? "ok" : "wrong") +
                           ", transcript reveals AB: " + (leaked ? "yes" : "no")};
  });
}

std::vector<CheckResult> run_selftest() {
  return {check_master_privacy(),  check_share_uniformity(), check_collusion_rank(),
          check_strong_security(), check_strassen(),         check_ps_toy()};
}

}  // namespace gcsa
