/*
  Copyright (c) 2026 the bandforms authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "obstructions.hpp"

#include <sstream>

#include "errors.hpp"
#include "number_theory.hpp"
#include "witt.hpp"

namespace bandforms {

namespace {

const char *kCiteSubadd =
    "unknotting numbers are subadditive under connected sum";
const char *kCiteGordian = "u_nb(K) <= u(K) + 1 (Kanenobu-Miyazawa)";
const char *kCiteFusion =
    "u_nb(K # -mirror(K)) <= 2 F, and F(K # -mirror(K)) <= bridge(K) - 1 "
    "(Juhasz-Miller-Zemke); bridge - 1 is Schubert-additive";
const char *kCiteChain = "mu_an(K) <= gamma4t(K) <= gamma4s(K) <= u_nb(K)";
const char *kCiteCover =
    "mu(K, r) / (r - 1) <= u_nb(K) (Hoste-Nakanishi-Taniyama)";
const char *kCiteLickorish =
    "u_nb(K) = 1 forces cyclic H1 of the double cover with a generator of "
    "self-linking +-1/det K (Lickorish)";
const char *kCiteGammaGordian = "gamma4s(K) <= u(K) + 1";
const char *kCiteRecorded = "recorded value";

} // namespace

std::string ObstructionResult::reason_str() const {
  switch (reason) {
    case ObstructionReason::non_cyclic: return "non-cyclic group";
    case ObstructionReason::no_pm_square_generator:
      return "no generator with self-linking +-1/det";
    case ObstructionReason::witness_found: return "witness found";
  }
  return "?";
}

ObstructionResult lickorish_test(const LinkingForm &f, const Limits &lim) {
  if (!is_nonsingular(f))
    throw InputError("lickorish_test requires a nonsingular form");
  if (f.group().rank() >= 2)
    return {true, ObstructionReason::non_cyclic, std::nullopt};
  mpz_class d = f.order();
  if (d == 1)
    return {false, ObstructionReason::witness_found, mpz_class(0)};
  if (d > cap_as_mpz(lim.enumeration_cap))
    throw CapExceeded("lickorish_test: generator search over " + d.get_str() +
                      " units exceeds the enumeration cap " +
                      std::to_string(lim.enumeration_cap));
  const RationalModOne &q = f.gram()[0][0];
  RationalModOne plus(1, d), minus(d - 1, d);
  for (mpz_class x = 1; x < d; ++x) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    if (g != 1) continue;
    RationalModOne v = q.scaled(x * x);
    if (v == plus || v == minus)
      return {false, ObstructionReason::witness_found, x};
  }
  return {true, ObstructionReason::no_pm_square_generator, std::nullopt};
}

PmSquareResult pm_square_solvable(const mpz_class &c, const mpz_class &n,
                                  const Limits &lim) {
  if (n < 2) throw InputError("pm_square_solvable: modulus must be >= 2");
  if (n > cap_as_mpz(lim.enumeration_cap))
    throw CapExceeded("pm_square_solvable: modulus " + n.get_str() +
                      " exceeds the enumeration cap " +
                      std::to_string(lim.enumeration_cap));

  // Jacobi fast-reject per sign: a -1 at any odd prime not dividing c
  // kills that sign outright
  bool plus_possible = true, minus_possible = true;
  for (const auto &pp : factorize(n)) {
    if (pp.p == 2) continue;
    if (c % pp.p == 0) continue;
    if (jacobi(c, pp.p) == -1) plus_possible = false;
    if (jacobi(-c, pp.p) == -1) minus_possible = false;
  }
  if (!plus_possible && !minus_possible) return {false, std::nullopt, 0};

  unsigned long long nn = n.get_ui();
  mpz_class cp, cm;
  mpz_fdiv_r(cp.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
  cm = (n - cp) % n;
  unsigned long long tp = cp.get_ui(), tm = cm.get_ui();
  for (unsigned long long x = 0; x < nn; ++x) {
    unsigned long long sq = static_cast<unsigned long long>(
        (static_cast<unsigned __int128>(x) * x) % nn);
    if (plus_possible && sq == tp)
      return {true, mpz_class(static_cast<unsigned long>(x)), 1};
    if (minus_possible && sq == tm)
      return {true, mpz_class(static_cast<unsigned long>(x)), -1};
  }
  return {false, std::nullopt, 0};
}

std::string BoundReport::interval_str() const {
  std::ostringstream os;
  os << "[" << lower << ", ";
  if (upper)
    os << *upper;
  else
    os << "inf";
  os << "]";
  return os.str();
}

namespace {

struct ReportBuilder {
  BoundReport rep;
  std::string lower_rule, upper_rule;

  void raise_lower(long v, const std::string &rule, const std::string &cite,
                   const std::string &inputs) {
    rep.provenance.push_back({rule, cite, inputs + " => lower bound " +
                                              std::to_string(v)});
    if (v > rep.lower) {
      rep.lower = v;
      lower_rule = rule;
    }
  }
  void cap_upper(long v, const std::string &rule, const std::string &cite,
                 const std::string &inputs) {
    rep.provenance.push_back({rule, cite, inputs + " => upper bound " +
                                              std::to_string(v)});
    if (!rep.upper || v < *rep.upper) {
      rep.upper = v;
      upper_rule = rule;
    }
  }
  void note(const std::string &n) { rep.notes.push_back(n); }

  void finish() {
    if (rep.upper && rep.lower > *rep.upper)
      throw InputError("inconsistent supplied data for " + rep.quantity +
                       ": lower bound " + std::to_string(rep.lower) +
                       " from rule '" + lower_rule + "' exceeds upper bound " +
                       std::to_string(*rep.upper) + " from rule '" +
                       upper_rule + "'");
  }
};

const KnotRecord *single_leaf_record(const KnotExpression &e) {
  if (e.summands.size() != 1) return nullptr;
  return e.summands[0].record;
}

} // namespace

BoundsResult bounds(const KnotExpression &e, const Limits &lim) {
  BoundsResult out;
  out.expression = e.display();
  ReportBuilder unb, g4s, g4t;
  unb.rep.quantity = "u_nb";
  g4s.rep.quantity = "gamma4s";
  g4t.rep.quantity = "gamma4t";

  // form-derived data, best effort
  std::optional<LinkingForm> form;
  try {
    form = double_cover_form(e);
  } catch (const InputError &err) {
    unb.note(std::string("linking form unavailable: ") + err.what());
  }
  std::optional<ObstructionResult> lick;
  if (form) {
    try {
      lick = lickorish_test(*form, lim);
    } catch (const CapExceeded &err) {
      unb.note(std::string("twisted-band obstruction skipped: ") + err.what());
    }
  }
  std::optional<int> muan;
  if (form) {
    try {
      muan = mu_an(*form, lim);
    } catch (const Error &err) {
      unb.note(std::string("mu_an skipped: ") + err.what());
    }
  }

  const KnotRecord *rec = single_leaf_record(e);

  // gamma4t: chain lower bound, recorded exact value
  if (muan)
    g4t.raise_lower(*muan, "genus-chain", kCiteChain,
                    "mu_an = " + std::to_string(*muan));
  if (rec && rec->gamma4t) {
    g4t.raise_lower(*rec->gamma4t, "recorded-value", kCiteRecorded,
                    "gamma4t(" + rec->name + ") = " +
                        std::to_string(*rec->gamma4t) + " [" + rec->src + "]");
    g4t.cap_upper(*rec->gamma4t, "recorded-value", kCiteRecorded,
                  "gamma4t(" + rec->name + ") = " +
                      std::to_string(*rec->gamma4t) + " [" + rec->src + "]");
  }

  // gamma4s: at least gamma4t, recorded exact value
  if (g4t.rep.lower > 0)
    g4s.raise_lower(g4t.rep.lower, "genus-chain", kCiteChain,
                    "gamma4t >= " + std::to_string(g4t.rep.lower));
  if (rec && rec->gamma4s) {
    g4s.raise_lower(*rec->gamma4s, "recorded-value", kCiteRecorded,
                    "gamma4s(" + rec->name + ") = " +
                        std::to_string(*rec->gamma4s) + " [" + rec->src + "]");
    g4s.cap_upper(*rec->gamma4s, "recorded-value", kCiteRecorded,
                  "gamma4s(" + rec->name + ") = " +
                      std::to_string(*rec->gamma4s) + " [" + rec->src + "]");
  }
  if (rec && rec->gordian_u)
    g4s.cap_upper(*rec->gordian_u + 1, "gamma-gordian", kCiteGammaGordian,
                  "u(" + rec->name + ") = " + std::to_string(*rec->gordian_u) +
                      " [" + rec->src + "]");

  // u_nb lower bounds
  if (g4s.rep.lower > 0)
    unb.raise_lower(g4s.rep.lower, "genus-chain", kCiteChain,
                    "gamma4s >= " + std::to_string(g4s.rep.lower));
  if (form && !form->group().is_trivial())
    unb.raise_lower(min_generators(form->group()), "cover-generators",
                    kCiteCover,
                    "mu(K, 2) = " + std::to_string(min_generators(form->group())));
  if (rec)
    for (const auto &[r, mu] : rec->mu_r) {
      long lb = (mu + r - 2) / (r - 1); // ceil(mu / (r-1))
      unb.raise_lower(lb, "cover-generators", kCiteCover,
                      "mu(" + rec->name + ", " + std::to_string(r) + ") = " +
                          std::to_string(mu) + " [" + rec->src + "]");
    }
  if (lick && lick->obstructed && form->order() > 1)
    unb.raise_lower(2, "twisted-band-obstruction", kCiteLickorish,
                    "obstructed (" + lick->reason_str() + "), det = " +
                        form->order().get_str());

  // u_nb upper bounds
  if (rec && rec->gordian_u)
    unb.cap_upper(*rec->gordian_u + 1, "gordian-plus-one", kCiteGordian,
                  "u(" + rec->name + ") = " + std::to_string(*rec->gordian_u) +
                      " [" + rec->src + "]");
  if (auto j = detect_k_minus_mirror(e)) {
    std::optional<long> fusion;
    std::string inputs;
    const KnotRecord *jrec = single_leaf_record(*j);
    if (jrec && jrec->fusion_mm) {
      fusion = *jrec->fusion_mm;
      inputs = "F(" + jrec->name + " # -mirror) = " +
               std::to_string(*jrec->fusion_mm) + " [" + jrec->src + "]";
    } else if (auto br = bridge_index(*j)) {
      fusion = *br - 1;
      inputs = "J = " + j->display() + ", bridge(J) = " + std::to_string(*br) +
               ", F <= " + std::to_string(*br - 1);
    }
    if (fusion)
      unb.cap_upper(2 * *fusion, "fusion-band-trading", kCiteFusion, inputs);
    else
      unb.note("K # -mirror(K) shape detected but no fusion or bridge data");
  }
  if (e.is_sum()) {
    std::optional<long> total = 0;
    std::ostringstream parts;
    for (const auto &leaf : e.summands) {
      KnotExpression sub;
      sub.summands.push_back(leaf);
      BoundsResult subres = bounds(sub, lim);
      if (!subres.unb.upper) {
        total.reset();
        break;
      }
      if (parts.tellp() > 0) parts << " + ";
      parts << "u_nb(" << leaf.display() << ") <= " << *subres.unb.upper;
      *total += *subres.unb.upper;
    }
    if (total)
      unb.cap_upper(*total, "subadditivity", kCiteSubadd, parts.str());
  }

  // close the chain: gamma4s <= u_nb, gamma4t <= gamma4s
  if (unb.rep.upper)
    g4s.cap_upper(*unb.rep.upper, "genus-chain", kCiteChain,
                  "u_nb <= " + std::to_string(*unb.rep.upper));
  if (g4s.rep.upper)
    g4t.cap_upper(*g4s.rep.upper, "genus-chain", kCiteChain,
                  "gamma4s <= " + std::to_string(*g4s.rep.upper));

  unb.finish();
  g4s.finish();
  g4t.finish();
  out.unb = std::move(unb.rep);
  out.gamma4s = std::move(g4s.rep);
  out.gamma4t = std::move(g4t.rep);
  return out;
}

} // namespace bandforms
