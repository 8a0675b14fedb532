#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "opdyn/bias.hpp"
#include "opdyn/grid.hpp"
#include "opdyn/report.hpp"

namespace opdyn {

namespace detail {

/// Hypothesis predicates are decided on signed grid indices (exact
/// integer arithmetic); only the weight evaluations and the recorded
/// witnesses use the floating-point grid values. This keeps
/// "equal distance" and sign conditions free of rounding artifacts.
struct GridView {
    std::vector<double> pts;
    long long half;
    double band;

    explicit GridView(const GridSpec& grid)
        : pts(grid.points()),
          half(static_cast<long long>(grid.half())),
          band(grid.exclusion_band) {}

    long long m(std::size_t t) const { return static_cast<long long>(t) - half; }

    // strict-sign conditions skip points inside the exclusion band
    bool signed_ok(std::size_t t) const { return std::fabs(pts[t]) > band; }
};

inline void push_witness(ItemResult& item, const GridSpec& grid, Witness w) {
    if (grid.witness_cap == 0 || item.witnesses.size() < grid.witness_cap) {
        item.witnesses.push_back(std::move(w));
    }
}

inline Witness weight_triple(double xi, double xj, double xd, double cj, double cd) {
    Witness w;
    w.kind = Witness::Kind::WeightTriple;
    w.p1 = xi;
    w.p2 = xj;
    w.p3 = xd;
    w.lhs = cj;
    w.rhs = cd;
    return w;
}

/// Shared core of the confirmation and negativity checkers. The two
/// differ only in which side of each inequality is preferred:
///   confirmation: closer same-side opinions win; equal distance is
///     broken toward the own-opinion side; crossing the spectrum can
///     win only when strictly closer (existence).
///   negativity: farther same-side opinions win; equal distance is
///     broken away from the expectation side; a same-side farther
///     opinion can beat a strictly closer opposite one (existence).
template <typename WeightFn>
ConditionReport check_pairwise(WeightFn&& c, const GridSpec& grid, double tol,
                               bool negativity) {
    grid.validate();
    const GridView gv(grid);
    const std::size_t R = grid.resolution;
    const double tol_strict = grid.tol_strict;

    // weight table: C[t1*R + t2] = c(pts[t1], pts[t2])
    std::vector<double> C(R * R);
    for (std::size_t t1 = 0; t1 < R; ++t1) {
        for (std::size_t t2 = 0; t2 < R; ++t2) {
            C[t1 * R + t2] = c(gv.pts[t1], gv.pts[t2]);
        }
    }
    const auto cw = [&](std::size_t a, std::size_t b) { return C[a * R + b]; };

    const char* prefix = negativity ? "8" : "7";
    ItemResult it1, it2, it3, it4;
    it1.item = std::string(prefix) + "a-1";
    it2.item = std::string(prefix) + "a-2";
    it3.item = std::string(prefix) + "a-3-existence";
    it3.existence = true;
    it4.item = std::string(prefix) + "b";

    bool exist_found = false;
    bool have_best = false;
    Witness best_attempt;       // closest miss, reported if existence fails
    double best_margin = 0.0;

    for (std::size_t i = 0; i < R; ++i) {
        const long long mi = gv.m(i);
        for (std::size_t j = 0; j < R; ++j) {
            const long long mj = gv.m(j);
            const long long dj = std::llabs(mj - mi);
            const double fdj = static_cast<double>(dj) * grid.step();
            for (std::size_t d = 0; d < R; ++d) {
                const long long md = gv.m(d);
                const long long dd = std::llabs(md - mi);
                const double fdd = static_cast<double>(dd) * grid.step();

                // item 1: distance monotonicity among same-sign opinions on
                // one side of x_i (nested intervals)
                const bool same_side_of_i = (mj - mi) * (md - mi) > 0;
                const bool dist1 = negativity ? (fdj > fdd + tol) : (fdj < fdd - tol);
                if (gv.signed_ok(j) && gv.signed_ok(d) && mj * md > 0 &&
                    same_side_of_i && dist1) {
                    ++it1.checked;
                    if (!(cw(i, j) > cw(i, d) + tol_strict)) {
                        it1.pass = false;
                        push_witness(it1, grid,
                                     weight_triple(gv.pts[i], gv.pts[j], gv.pts[d],
                                                   cw(i, j), cw(i, d)));
                    }
                }

                // item 2: equal distance, tie broken by spectrum side
                const bool side2 =
                    negativity ? (mi * mj < mi * md) : (mi * mj > mi * md);
                if (std::fabs(fdj - fdd) <= tol && side2) {
                    ++it2.checked;
                    if (!(cw(i, j) > cw(i, d) + tol_strict)) {
                        it2.pass = false;
                        push_witness(it2, grid,
                                     weight_triple(gv.pts[i], gv.pts[j], gv.pts[d],
                                                   cw(i, j), cw(i, d)));
                    }
                }

                // item 3 (existence): can a cross-spectrum comparison still
                // be won when the distance ratio is below 1?
                const bool signs3 = negativity ? (mi * mj > 0 && mi * md < 0)
                                               : (mi * mj < 0 && mi * md > 0);
                const bool dist3 = negativity ? (fdd < fdj - tol) : (fdj < fdd - tol);
                if (gv.signed_ok(i) && gv.signed_ok(j) && gv.signed_ok(d) &&
                    signs3 && dist3) {
                    ++it3.checked;
                    const double zeta = negativity ? fdd / fdj : fdj / fdd;
                    if (cw(i, j) > cw(i, d) + tol_strict) {
                        exist_found = true;
                        Witness w = weight_triple(gv.pts[i], gv.pts[j], gv.pts[d],
                                                  cw(i, j), cw(i, d));
                        w.zeta = zeta;
                        push_witness(it3, grid, std::move(w));
                    } else {
                        const double margin = cw(i, j) - cw(i, d);
                        if (!have_best || margin > best_margin) {
                            have_best = true;
                            best_margin = margin;
                            best_attempt = weight_triple(gv.pts[i], gv.pts[j],
                                                         gv.pts[d], cw(i, j), cw(i, d));
                            best_attempt.zeta = zeta;
                        }
                    }
                }
            }
        }
    }
    it3.pass = exist_found;
    if (!exist_found) {
        it3.witnesses.clear();
        if (have_best) it3.witnesses.push_back(best_attempt);  // closest miss
    }

    // item 4: neutral first argument weighs mirrored opinions equally
    const std::size_t h = static_cast<std::size_t>(gv.half);
    for (std::size_t t = h + 1; t < R; ++t) {
        const std::size_t nt = R - 1 - t;  // exact negation of pts[t]
        ++it4.checked;
        const double cj = cw(h, t);
        const double cd = cw(h, nt);
        if (!(std::fabs(cj - cd) <= grid.tol_eq)) {
            it4.pass = false;
            push_witness(it4, grid,
                         weight_triple(0.0, gv.pts[t], gv.pts[nt], cj, cd));
        }
    }

    ConditionReport rep;
    rep.check = negativity ? "negativity" : "confirmation";
    rep.grid = grid;
    rep.tol = tol;
    rep.items = {std::move(it1), std::move(it2), std::move(it3), std::move(it4)};
    return rep;
}

template <typename T>
concept WeightCallable = std::is_invocable_r_v<double, T, double, double>;
template <typename T>
concept ScalarCallable = std::is_invocable_r_v<double, T, double>;

}  // namespace detail

/// Checks the asymmetric confirmation-bias conditions:
///   7a-1  closer same-sign opinions on one side of x_i weigh strictly more
///   7a-2  at equal distance, the opinion on x_i's side of the spectrum wins
///   7a-3  existence: an opposite-side opinion, when strictly closer
///         (ratio zeta < 1), can outweigh a same-side one
///   7b    c(0, a) = c(0, -a)
template <detail::WeightCallable WeightFn>
ConditionReport check_confirmation(WeightFn&& c, const GridSpec& grid,
                                   double tol = 0.0) {
    return detail::check_pairwise(std::forward<WeightFn>(c), grid, tol, false);
}

inline ConditionReport check_confirmation(const BiasFamily& fam,
                                          const GridSpec& grid, double tol = 0.0) {
    return check_confirmation(
        [&fam](double a, double b) { return eval(fam, a, b); }, grid, tol);
}

/// Checks the asymmetric negativity-bias conditions (mirror of the
/// confirmation checker: farther from the sensed expectation wins):
///   8a-1, 8a-2, 8a-3-existence, 8b.
template <detail::WeightCallable WeightFn>
ConditionReport check_negativity(WeightFn&& cbar, const GridSpec& grid,
                                 double tol = 0.0) {
    return detail::check_pairwise(std::forward<WeightFn>(cbar), grid, tol, true);
}

inline ConditionReport check_negativity(const BiasFamily& fam,
                                        const GridSpec& grid, double tol = 0.0) {
    return check_negativity(
        [&fam](double a, double b) { return eval(fam, a, b); }, grid, tol);
}

/// Orientation of the midpoint items in the theorem checkers. The
/// as-written direction is satisfied by f = x^3 but contradicted by
/// f = tanh; the corrected direction (inequalities reversed) matches
/// tanh and the reference surface orderings but rejects the cubic.
/// Both are first-class; reports record which one was used.
enum class Orientation { AsWritten, Corrected };

inline std::string to_string(Orientation o) {
    return o == Orientation::AsWritten ? "as-written" : "corrected";
}

namespace detail {

template <ScalarCallable F, ScalarCallable G>
ConditionReport check_theorem(F&& f, G&& g, const GridSpec& grid,
                              Orientation orientation, bool increasing_g,
                              const char* prefix) {
    grid.validate();
    const GridView gv(grid);
    const std::size_t R = grid.resolution;
    const double tol_strict = grid.tol_strict;
    const std::size_t h = static_cast<std::size_t>(gv.half);

    std::vector<double> F_(R);
    for (std::size_t t = 0; t < R; ++t) F_[t] = f(gv.pts[t]);

    ItemResult ia, ib, ic, id, ie;
    ia.item = std::string(prefix) + "a";
    ib.item = std::string(prefix) + "b";
    ic.item = std::string(prefix) + "c";
    id.item = std::string(prefix) + "d";
    ie.item = std::string(prefix) + "e";

    // item a: g strictly monotone over the sorted realized f-distances.
    // Distances are merged when closer than dist_merge_tol: equal real
    // distances realized through different pairs can land an ulp apart.
    {
        std::vector<double> dists;
        dists.reserve(R * (R + 1) / 2);
        for (std::size_t t1 = 0; t1 < R; ++t1) {
            for (std::size_t t2 = t1; t2 < R; ++t2) {
                dists.push_back(std::fabs(F_[t1] - F_[t2]));
            }
        }
        std::sort(dists.begin(), dists.end());
        std::vector<double> reps;
        for (double d : dists) {
            if (reps.empty() || d - reps.back() > grid.dist_merge_tol) {
                reps.push_back(d);
            }
        }
        for (std::size_t k = 0; k + 1 < reps.size(); ++k) {
            ++ia.checked;
            const double glo = g(reps[k]);
            const double ghi = g(reps[k + 1]);
            const bool ok = increasing_g ? (ghi > glo + tol_strict)
                                         : (glo > ghi + tol_strict);
            if (!ok) {
                ia.pass = false;
                Witness w;
                w.kind = Witness::Kind::DistancePair;
                w.p1 = reps[k];
                w.p2 = reps[k + 1];
                w.lhs = glo;
                w.rhs = ghi;
                push_witness(ia, grid, std::move(w));
            }
        }
    }

    // item b: f strictly increasing (adjacent grid points)
    for (std::size_t t = 0; t + 1 < R; ++t) {
        ++ib.checked;
        if (!(F_[t + 1] > F_[t] + tol_strict)) {
            ib.pass = false;
            Witness w;
            w.kind = Witness::Kind::ValuePair;
            w.p1 = gv.pts[t];
            w.p2 = gv.pts[t + 1];
            w.lhs = F_[t];
            w.rhs = F_[t + 1];
            push_witness(ib, grid, std::move(w));
        }
    }

    // items c/d: midpoint inequalities for equidistant pairs around x_i.
    // as-written: f(x_i) below the midpoint for x_i > 0 (above for x_i < 0);
    // corrected: reversed.
    const bool below_for_positive = (orientation == Orientation::AsWritten);
    for (std::size_t t = 0; t < R; ++t) {
        const long long mi = gv.m(t);
        if (mi == 0 || !gv.signed_ok(t)) continue;
        for (std::size_t delta = 1;; ++delta) {
            if (t + delta >= R || delta > t) break;
            const std::size_t up = t + delta;
            const std::size_t dn = t - delta;
            const double mid = 0.5 * (F_[up] + F_[dn]);
            if (mi > 0) {
                // x_j = pts[up] > x_d = pts[dn]
                ++ic.checked;
                const bool ok = below_for_positive ? (mid > F_[t] + tol_strict)
                                                   : (F_[t] > mid + tol_strict);
                if (!ok) {
                    ic.pass = false;
                    Witness w;
                    w.kind = Witness::Kind::MidpointTriple;
                    w.p1 = gv.pts[t];
                    w.p2 = gv.pts[up];
                    w.p3 = gv.pts[dn];
                    w.lhs = F_[t];
                    w.rhs = mid;
                    push_witness(ic, grid, std::move(w));
                }
            } else {
                // x_j = pts[dn] < x_d = pts[up]
                ++id.checked;
                const bool ok = below_for_positive ? (F_[t] > mid + tol_strict)
                                                   : (mid > F_[t] + tol_strict);
                if (!ok) {
                    id.pass = false;
                    Witness w;
                    w.kind = Witness::Kind::MidpointTriple;
                    w.p1 = gv.pts[t];
                    w.p2 = gv.pts[dn];
                    w.p3 = gv.pts[up];
                    w.lhs = F_[t];
                    w.rhs = mid;
                    push_witness(id, grid, std::move(w));
                }
            }
        }
    }

    // item e: f(0) is the midpoint of every mirrored pair
    for (std::size_t t = h + 1; t < R; ++t) {
        const std::size_t nt = R - 1 - t;
        ++ie.checked;
        const double mid = 0.5 * (F_[t] + F_[nt]);
        if (!(std::fabs(F_[h] - mid) <= grid.tol_eq)) {
            ie.pass = false;
            Witness w;
            w.kind = Witness::Kind::MidpointTriple;
            w.p1 = 0.0;
            w.p2 = gv.pts[t];
            w.p3 = gv.pts[nt];
            w.lhs = F_[h];
            w.rhs = mid;
            push_witness(ie, grid, std::move(w));
        }
    }

    ConditionReport rep;
    rep.check = increasing_g ? "theorem2" : "theorem1";
    rep.grid = grid;
    rep.orientation = to_string(orientation);
    rep.items = {std::move(ia), std::move(ib), std::move(ic), std::move(id),
                 std::move(ie)};
    return rep;
}

}  // namespace detail

/// Checks the decomposition conditions for a confirmation weight
/// c(x_i, x_j) = g(|f(x_i) - f(x_j)|): items 11a (g strictly
/// decreasing), 11b (f strictly increasing), 11c/11d (midpoint
/// inequalities, direction per orientation), 11e (f(0) is the midpoint
/// of every mirrored pair).
template <detail::ScalarCallable F, detail::ScalarCallable G>
ConditionReport check_theorem1(F&& f, G&& g, const GridSpec& grid,
                               Orientation orientation) {
    return detail::check_theorem(std::forward<F>(f), std::forward<G>(g), grid,
                                 orientation, false, "11");
}

/// Negativity-side mirror: item 12a requires g strictly increasing;
/// 12b-12e parallel 11b-11e.
template <detail::ScalarCallable F, detail::ScalarCallable G>
ConditionReport check_theorem2(F&& f, G&& g, const GridSpec& grid,
                               Orientation orientation) {
    return detail::check_theorem(std::forward<F>(f), std::forward<G>(g), grid,
                                 orientation, true, "12");
}

inline ConditionReport check_theorem1(const Decomposed& d, const GridSpec& grid,
                                      Orientation orientation) {
    return check_theorem1(d.f, d.g, grid, orientation);
}
inline ConditionReport check_theorem2(const Decomposed& d, const GridSpec& grid,
                                      Orientation orientation) {
    return check_theorem2(d.f, d.g, grid, orientation);
}

/// Equal-weight demonstration for the bounded-confidence baseline on
/// the canonical triple x_i = 0.1, x_j = -0.3, x_h = 0.5 (both
/// differences are 0.4, one on each side). Kinds:
///   InBandEqual:        both differences inside the band, equal weight a
///   OutOfBandEqualZero: both outside, equal weight 0
///   None:               exactly one inside; the weights differ
struct HKWitnessResult {
    enum class Kind { InBandEqual, OutOfBandEqualZero, None };
    Kind kind = Kind::None;
    double x_i = 0.1;
    double x_j = -0.3;
    double x_h = 0.5;
    double w_j = 0.0;
    double w_h = 0.0;
    bool band_condition = false;  // 0.4 < min(eps_hi, -eps_lo)
};

inline HKWitnessResult hk_equal_weight_witness(double eps_lo, double eps_hi,
                                               double a) {
    const HKIndicator hk(eps_lo, eps_hi, a);
    HKWitnessResult r;
    r.w_j = hk(r.x_i, r.x_j);
    r.w_h = hk(r.x_i, r.x_h);
    r.band_condition = 0.4 < std::min(eps_hi, -eps_lo);
    if (r.w_j == r.w_h) {
        r.kind = (r.w_j > 0.0) ? HKWitnessResult::Kind::InBandEqual
                               : HKWitnessResult::Kind::OutOfBandEqualZero;
    } else {
        r.kind = HKWitnessResult::Kind::None;
    }
    return r;
}

}  // namespace opdyn
