#include "sqdet/flagspace.hpp"

#include "sqdet/errors.hpp"
#include "sqdet/matroid.hpp"
#include "sqdet/random.hpp"

#include <algorithm>

namespace sqdet {

std::vector<BasisMonomial> basis_monomials(const Chirotope& chi) {
    std::vector<BasisMonomial> out;
    for (Mask b : chi.matroid().bases()) out.push_back({b, chi.sign_of_sorted(b)});
    return out;
}

namespace {

Sign product_on(const SignVector& v, Mask b) {
    Sign s = Sign::Plus;
    for (int i : elements(b)) s = s * v.at(i);
    return s;
}

} // namespace

FlagVector phi(const AffineOrientedMatroid& om, const SignVector& region) {
    FlagVector out;
    for (const auto& [b, orientation] : basis_monomials(om.central())) {
        const auto idx = om.feasible_index(b);
        if (!idx || !conforms(om.feasible_cocircuits()[*idx], region)) continue;
        out[b] = to_int(product_on(region, b) * orientation);
    }
    return out;
}

BigInt pairing(const FlagVector& u, const FlagVector& v) {
    BigInt acc = 0;
    for (const auto& [b, c] : u) {
        auto it = v.find(b);
        if (it != v.end()) acc += c * it->second;
    }
    return acc;
}

Chain boundary(const FlagVector& v) {
    Chain out;
    for (const auto& [b, c] : v) {
        int k = 0;
        for (int i : elements(b)) {
            BigInt& slot = out[b & ~bit(i)];
            if (k % 2 == 0)
                slot += c;
            else
                slot -= c;
            ++k;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<BigInt> smith_divisors(IntMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    };
    std::vector<BigInt> divisors;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) return divisors;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t c = t; c < cols; ++c) a(i, c) -= q * a(t, c);
                clean = clean && a(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t r = t; r < rows; ++r) a(r, j) -= q * a(r, t);
                clean = clean && a(t, j) == 0;
            }
            if (!clean) continue;
            // The pivot must divide the whole trailing block.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            for (std::size_t c = t; c < cols; ++c) a(t, c) += a(bad, c);
        }
        divisors.push_back(abs(a(t, t)));
    }
    return divisors;
}

KernelReport check_basis_of_kernel(const AffineOrientedMatroid& om, const std::vector<Tope>& topes,
                                   const PolyMatrix& s, std::size_t max_bases) {
    const auto& bases = om.matroid().bases();
    if (bases.size() > max_bases)
        throw SizeError("check_basis_of_kernel: " + std::to_string(bases.size()) + " bases exceed the guard of " +
                        std::to_string(max_bases));
    KernelReport rep;
    rep.n_topes = topes.size();
    rep.n_bases = bases.size();

    std::vector<FlagVector> phis;
    for (const auto& t : topes) phis.push_back(phi(om, t.sign));

    for (std::size_t a = 0; a < phis.size() && rep.all_in_kernel; ++a)
        if (!boundary(phis[a]).empty()) {
            rep.all_in_kernel = false;
            rep.kernel_witness = a;
        }

    for (std::size_t a = 0; a < phis.size() && rep.gram_identity; ++a)
        for (std::size_t b = 0; b < phis.size(); ++b)
            if (IntPoly(pairing(phis[a], phis[b])) != s(a, b)) {
                rep.gram_identity = false;
                rep.gram_witness = std::make_pair(a, b);
                break;
            }

    IntMatrix coords(phis.size(), bases.size());
    for (std::size_t a = 0; a < phis.size(); ++a)
        for (std::size_t k = 0; k < bases.size(); ++k) {
            auto it = phis[a].find(bases[k]);
            if (it != phis[a].end()) coords(a, k) = it->second;
        }
    rep.divisors = smith_divisors(coords);
    rep.rank = rep.divisors.size();
    rep.unit_divisors = std::all_of(rep.divisors.begin(), rep.divisors.end(), [](const BigInt& d) { return d == 1; });
    rep.mu_plus_dual = mobius_plus(dual(om.matroid()));
    return rep;
}

namespace {

// Direction of the line cut out by the independent normals in `rows`
// (r-1 of them): v_k = det(rows; e_k).
RationalVector line_direction(const RationalMatrix& rows, int dim) {
    RationalVector v(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        RationalMatrix m = rows;
        RationalVector e(static_cast<std::size_t>(dim));
        e[static_cast<std::size_t>(k)] = 1;
        m.push_back(e);
        v[static_cast<std::size_t>(k)] = rational_det(m);
    }
    return v;
}

RationalMatrix normals_of(const Arrangement& arr, Mask s) {
    RationalMatrix rows;
    for (int i : elements(s)) rows.push_back(arr[i].normal);
    return rows;
}

} // namespace

YMatrix build_y_matrix(const Arrangement& arr, std::uint64_t seed, std::size_t full_det_limit) {
    const AffineOrientedMatroid om = compile(arr);
    const Matroid& m = om.matroid();
    const int r = arr.dim();

    std::vector<RationalVector> directions;
    for (Mask s : k_subsets(arr.size(), r - 1))
        if (rank(m, s) == r - 1) directions.push_back(line_direction(normals_of(arr, s), r));

    YMatrix out;
    Rng rng(seed);
    bool generic = false;
    while (!generic && out.draws < 64) {
        ++out.draws;
        out.xi.assign(static_cast<std::size_t>(r), 0);
        for (auto& c : out.xi) c = rng.uniform(-10000, 10000);
        generic = std::all_of(directions.begin(), directions.end(),
                              [&](const RationalVector& v) { return dot(out.xi, v) != 0; });
    }
    if (!generic) throw InvariantError("build_y_matrix: no generic covector found in 64 draws; try another seed");

    // μ(b): the region having the vertex p_b as its ξ-maximum.
    for (const auto& [b, point] : vertices(arr)) {
        SignVector region = arr.sign_vector_at(point);
        for (int j : elements(b)) {
            RationalVector v = line_direction(normals_of(arr, b & ~bit(j)), r);
            if (dot(out.xi, v) > 0)
                for (auto& c : v) c = -c;
            region.set(j, sign_of(sgn(dot(arr[j].normal, v))));
        }
        out.bases.push_back(b);
        out.regions.push_back(region);
    }

    const std::size_t n = out.bases.size();
    out.y = IntMatrix(n, n);
    std::vector<std::string> labels;
    for (const auto& reg : out.regions) labels.push_back(reg.key());
    out.yq = PolyMatrix(labels);
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col) {
            if (!conforms(basis_to_cocircuit(om, out.bases[col]), out.regions[row])) continue;
            const int d = separation(out.regions[row], out.regions[col]);
            out.y(row, col) = d % 2 == 0 ? 1 : -1;
            out.yq(row, col) = IntPoly::monomial(d % 2 == 0 ? 1 : -1, static_cast<std::size_t>(d));
        }
    out.det_y = int_det(out.y);
    out.det_yq_at_one = int_det(out.yq.evaluate(1));
    if (n <= full_det_limit) out.det_yq = poly_det(out.yq);

    std::vector<FlagVector> phis;
    for (const auto& reg : out.regions) phis.push_back(phi(om, reg));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) {
            // Coefficient of φ(A) on 𝐞_b = (Π_{i∈b} μ(b)(i)) e_b.
            const Mask b = out.bases[col];
            BigInt coeff = 0;
            auto it = phis[row].find(b);
            if (it != phis[row].end())
                coeff = it->second * to_int(om.central().sign_of_sorted(b)) * to_int(product_on(out.regions[col], b));
            if (coeff != out.y(row, col)) out.expansion_identity = false;

            long common = 0;
            for (Mask c : out.bases) {
                const SignVector yc = basis_to_cocircuit(om, c);
                if (conforms(yc, out.regions[row]) && conforms(yc, out.regions[col])) ++common;
            }
            const int d = separation(out.regions[row], out.regions[col]);
            if (pairing(phis[row], phis[col]) != (d % 2 == 0 ? common : -common)) out.extended_gram = false;
        }
    }
    return out;
}

} // namespace sqdet
