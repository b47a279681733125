#include "segrecalc/linalg.hpp"

#include "segrecalc/errors.hpp"

namespace segrecalc {

FieldMatrix::FieldMatrix(PrimeField field, int n)
    : field_(field), n_(n), rows_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

FieldMatrix FieldMatrix::identity(PrimeField field, int n) {
    FieldMatrix m(field, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FieldMatrix FieldMatrix::random(PrimeField field, int n, Rng& rng) {
    FieldMatrix m(field, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, field.random(rng));
    return m;
}

FieldMatrix FieldMatrix::random_invertible(PrimeField field, int n, Rng& rng) {
    for (;;) {
        FieldMatrix m = random(field, n, rng);
        if (m.invertible()) return m;
    }
}

bool FieldMatrix::invertible() const {
    FieldMatrix work = *this;
    const PrimeField& F = field_;
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int c = 0; c < n_; ++c) {
                std::uint32_t tmp = work.at(col, c);
                work.set(col, c, work.at(pivot, c));
                work.set(pivot, c, tmp);
            }
        std::uint32_t inv = F.inv(work.at(col, col));
        for (int r = col + 1; r < n_; ++r) {
            std::uint32_t f = F.mul(work.at(r, col), inv);
            if (f == 0) continue;
            for (int c = col; c < n_; ++c)
                work.set(r, c, F.sub(work.at(r, c), F.mul(f, work.at(col, c))));
        }
    }
    return true;
}

FieldMatrix FieldMatrix::inverse() const {
    const PrimeField& F = field_;
    FieldMatrix work = *this;
    FieldMatrix inv = identity(F, n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw input_error("matrix is singular");
        if (pivot != col)
            for (int c = 0; c < n_; ++c) {
                std::uint32_t tmp = work.at(col, c);
                work.set(col, c, work.at(pivot, c));
                work.set(pivot, c, tmp);
                tmp = inv.at(col, c);
                inv.set(col, c, inv.at(pivot, c));
                inv.set(pivot, c, tmp);
            }
        std::uint32_t piv_inv = F.inv(work.at(col, col));
        for (int c = 0; c < n_; ++c) {
            work.set(col, c, F.mul(work.at(col, c), piv_inv));
            inv.set(col, c, F.mul(inv.at(col, c), piv_inv));
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col) continue;
            std::uint32_t f = work.at(r, col);
            if (f == 0) continue;
            for (int c = 0; c < n_; ++c) {
                work.set(r, c, F.sub(work.at(r, c), F.mul(f, work.at(col, c))));
                inv.set(r, c, F.sub(inv.at(r, c), F.mul(f, inv.at(col, c))));
            }
        }
    }
    return inv;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    const PrimeField& F = field_;
    FieldMatrix r(F, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::uint32_t acc = 0;
            for (int k = 0; k < n_; ++k) acc = F.add(acc, F.mul(at(i, k), o.at(k, j)));
            r.set(i, j, acc);
        }
    return r;
}

std::vector<Poly> linear_change(const std::vector<Poly>& gens, const FieldMatrix& m) {
    if (gens.empty()) return {};
    if (!m.invertible()) throw input_error("linear change matrix is singular");
    RingPtr ring = gens.front().ring();
    const int n = ring->nvars();
    if (m.size() != n) throw input_error("linear change matrix has the wrong size");

    // Images of the variables.
    std::vector<Poly> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Poly img = Poly::zero(ring);
        for (int i = 0; i < n; ++i) {
            Monomial xi(n);
            xi.set_exponent(i, 1);
            img = img + Poly::monomial(ring, xi, m.at(j, i));
        }
        images.push_back(img);
    }

    // Power tables, built lazily up to the maximum exponent seen per variable.
    std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(n));
    auto power = [&](int var, int e) -> const Poly& {
        auto& tab = powers[static_cast<std::size_t>(var)];
        if (tab.empty()) tab.push_back(Poly::constant(ring, 1));
        while (static_cast<int>(tab.size()) <= e)
            tab.push_back(tab.back() * images[static_cast<std::size_t>(var)]);
        return tab[static_cast<std::size_t>(e)];
    };

    std::vector<Poly> out;
    out.reserve(gens.size());
    for (const Poly& g : gens) {
        require_same_ring(g.ring(), ring);
        Poly acc = Poly::zero(ring, g.order());
        for (const Term& t : g.terms()) {
            Poly prod = Poly::constant(ring, 1, g.order()).scaled(t.coeff);
            for (int v = 0; v < n; ++v) {
                std::uint16_t e = t.mono.exponent(v);
                if (e > 0) prod = prod * power(v, e).reordered(g.order());
            }
            acc = acc + prod;
        }
        out.push_back(acc);
    }
    return out;
}

bool RowSpace::insert(std::vector<std::uint32_t> row) {
    reduce(row);
    for (std::size_t i = 0; i < width_; ++i) {
        if (row[i] != 0) {
            std::uint32_t inv = field_.inv(row[i]);
            for (std::size_t j = 0; j < width_; ++j) row[j] = field_.mul(row[j], inv);
            pivots_.emplace_back(i, std::move(row));
            return true;
        }
    }
    return false;
}

bool RowSpace::contains(std::vector<std::uint32_t> row) const {
    reduce(row);
    for (std::size_t i = 0; i < width_; ++i)
        if (row[i] != 0) return false;
    return true;
}

void RowSpace::reduce(std::vector<std::uint32_t>& row) const {
    for (const auto& [col, pivot] : pivots_) {
        std::uint32_t f = row[col];
        if (f == 0) continue;
        for (std::size_t j = 0; j < width_; ++j)
            row[j] = field_.sub(row[j], field_.mul(f, pivot[j]));
    }
}

}  // namespace segrecalc
