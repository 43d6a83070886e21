#include "vr/frobenius.hpp"

#include "json.hpp"

#include <sstream>

namespace vr {

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
    if (a.alg != b.alg) throw std::invalid_argument("algebra mismatch");
    return {a.alg, a.coords + b.coords};
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
    if (a.alg != b.alg) throw std::invalid_argument("algebra mismatch");
    return {a.alg, a.coords - b.coords};
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
    if (a.alg != b.alg) throw std::invalid_argument("algebra mismatch");
    return {a.alg, a.alg->mult(a.coords, b.coords)};
}

AlgElement operator*(const Rat& s, const AlgElement& a) {
    RatVec v = a.coords;
    for (int i = 0; i < v.size(); ++i) v(i) *= s;
    return {a.alg, std::move(v)};
}

AlgElement operator-(const AlgElement& a) { return Rat(-1) * a; }

bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.alg == b.alg && a.coords == b.coords;
}

FrobAlg FrobAlg::build_full(const SignSeq& seq) {
    const int r = seq.params().r;
    FrobAlg alg(seq, false);
    alg.dim_ = r - 1;
    alg.labels_.resize(static_cast<size_t>(alg.dim_));
    alg.eta_.resize(static_cast<size_t>(alg.dim_));
    for (int i = 0; i < alg.dim_; ++i) {
        alg.labels_[static_cast<size_t>(i)] = i;
        alg.eta_[static_cast<size_t>(i)] = (i % 2 == 0 ? 1 : -1) * seq.eps(i + 1);
    }
    alg.table_.assign(static_cast<size_t>(alg.dim_) * alg.dim_ * alg.dim_, 0);
    for (int i = 0; i < alg.dim_; ++i) {
        for (int j = 0; j < alg.dim_; ++j) {
            for (int k = 0; k < alg.dim_; ++k) {
                int w = triple_sign(seq, i, j, k);
                if (w != 0) {
                    alg.table_[alg.idx(i, j, k)] =
                        static_cast<std::int32_t>(w * alg.eta_[static_cast<size_t>(k)]);
                }
            }
        }
    }
    alg.finish();
    return alg;
}

FrobAlg FrobAlg::build_even(const FrobAlg& full) {
    if (full.plus_) throw std::invalid_argument("already the even part");
    const int m = (full.params().r - 1) / 2;
    FrobAlg alg(full.seq_, true);
    alg.dim_ = m;
    alg.labels_.resize(static_cast<size_t>(m));
    alg.eta_.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        alg.labels_[static_cast<size_t>(i)] = 2 * i;
        alg.eta_[static_cast<size_t>(i)] = full.eta_[static_cast<size_t>(2 * i)];
    }
    alg.table_.assign(static_cast<size_t>(m) * m * m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            // closure: products of even basis vectors may not touch odd colors
            for (int k = 0; k < full.dim_; ++k) {
                if (k % 2 == 1 && full.struct_const(2 * i, 2 * j, k) != 0) {
                    throw std::logic_error("even part is not closed under the product");
                }
            }
            for (int k = 0; k < m; ++k) {
                alg.table_[alg.idx(i, j, k)] = full.struct_const(2 * i, 2 * j, 2 * k);
            }
        }
    }
    alg.finish();
    return alg;
}

FrobAlg FrobAlg::from_raw(Params p, bool plus, std::vector<int> labels, std::vector<int> eta,
                          std::vector<std::int32_t> table) {
    FrobAlg alg(SignSeq(p), plus);
    alg.dim_ = static_cast<int>(labels.size());
    if (eta.size() != labels.size() ||
        table.size() != static_cast<size_t>(alg.dim_) * alg.dim_ * alg.dim_) {
        throw std::invalid_argument("inconsistent algebra data");
    }
    alg.labels_ = std::move(labels);
    alg.eta_ = std::move(eta);
    alg.table_ = std::move(table);
    alg.finish();
    return alg;
}

void FrobAlg::finish() {
    tau_.assign(static_cast<size_t>(dim_), 0);
    for (int k = 0; k < dim_; ++k) {
        long long t = 0;
        for (int j = 0; j < dim_; ++j) t += table_[idx(k, j, j)];
        tau_[static_cast<size_t>(k)] = t;
    }
}

AlgElement FrobAlg::basis(int position) const {
    if (position < 0 || position >= dim_) throw std::out_of_range("basis index out of range");
    RatVec v = RatVec::Zero(dim_);
    v(position) = Rat(1);
    return {this, std::move(v)};
}

AlgElement FrobAlg::element(RatVec coords) const {
    if (coords.size() != dim_) throw std::invalid_argument("coordinate size mismatch");
    return {this, std::move(coords)};
}

AlgElement FrobAlg::from_int_coords(const std::vector<long long>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("coordinate size mismatch");
    RatVec c(dim_);
    for (int i = 0; i < dim_; ++i) c(i) = Rat(static_cast<long>(v[static_cast<size_t>(i)]));
    return {this, std::move(c)};
}

RatVec FrobAlg::mult(const RatVec& a, const RatVec& b) const {
    RatVec out = RatVec::Zero(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (sign_of(a(i)) == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (sign_of(b(j)) == 0) continue;
            Rat ab = a(i) * b(j);
            const std::int32_t* rw = row(i, j);
            for (int k = 0; k < dim_; ++k) {
                if (rw[k] == 1) {
                    out(k) += ab;
                } else if (rw[k] == -1) {
                    out(k) -= ab;
                } else if (rw[k] != 0) {
                    out(k) += Rat(static_cast<long>(rw[k])) * ab;
                }
            }
        }
    }
    return out;
}

std::vector<long long> FrobAlg::mult_int(const std::vector<long long>& a,
                                         const std::vector<long long>& b) const {
    std::vector<long long> out(static_cast<size_t>(dim_), 0);
    for (int i = 0; i < dim_; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            long long ab = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
            if (ab == 0) continue;
            const std::int32_t* rw = row(i, j);
            for (int k = 0; k < dim_; ++k) out[static_cast<size_t>(k)] += ab * rw[k];
        }
    }
    return out;
}

RatMat FrobAlg::mult_matrix(const RatVec& a) const {
    RatMat m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        RatVec ej = RatVec::Zero(dim_);
        ej(j) = Rat(1);
        RatVec col = mult(a, ej);
        for (int k = 0; k < dim_; ++k) m(k, j) = col(k);
    }
    return m;
}

IntMat FrobAlg::mult_matrix_int(const std::vector<long long>& a) const {
    IntMat m = IntMat::Zero(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            const std::int32_t* rw = row(i, j);
            for (int k = 0; k < dim_; ++k) {
                if (rw[k] != 0) m(k, j) += Int(static_cast<long>(a[static_cast<size_t>(i)] * rw[k]));
            }
        }
    }
    return m;
}

Rat FrobAlg::trace_mult(const RatVec& a) const {
    Rat t(0);
    for (int n = 0; n < dim_; ++n) {
        if (sign_of(a(n)) != 0) t += a(n) * Rat(static_cast<long>(tau_[static_cast<size_t>(n)]));
    }
    return t;
}

AlgElement FrobAlg::gen_x() const {
    if (plus_) throw std::logic_error("x lives in the full algebra");
    return basis(1);
}

AlgElement FrobAlg::gen_y() const {
    if (plus_ || params().r < 5) throw std::logic_error("y requires the full algebra with r >= 5");
    return basis(2);
}

AlgElement FrobAlg::gen_w() const {
    if (plus_ || params().r < 5) throw std::logic_error("w requires the full algebra with r >= 5");
    return Rat(seq_.eps(2)) * basis(params().r - 3);
}

AlgElement FrobAlg::gen_iota() const {
    if (plus_) throw std::logic_error("iota lives in the full algebra");
    return basis(params().r - 2);
}

AlgElement FrobAlg::even_w() const {
    if (!plus_ || params().r < 5) throw std::logic_error("even w requires the even part with r >= 5");
    return Rat(seq_.eps(2)) * basis((params().r - 3) / 2);
}

AlgElement FrobAlg::even_y() const {
    if (!plus_ || params().r < 5) throw std::logic_error("even y requires the even part with r >= 5");
    return basis(1);
}

AlgElement FrobAlg::omega() const {
    std::vector<long long> w = omega_int();
    return from_int_coords(w);
}

std::vector<long long> FrobAlg::omega_int() const {
    std::vector<long long> out(static_cast<size_t>(dim_), 0);
    for (int n = 0; n < dim_; ++n) {
        const std::int32_t* rw = row(n, n);
        for (int k = 0; k < dim_; ++k) {
            out[static_cast<size_t>(k)] += static_cast<long long>(eta_[static_cast<size_t>(n)]) * rw[k];
        }
    }
    return out;
}

AlgElement FrobAlg::evaluate(const RatPoly& f, const AlgElement& a) const {
    RatVec acc = RatVec::Zero(dim_);
    for (int i = f.degree(); i >= 0; --i) {
        acc = mult(acc, a.coords);
        acc(0) += f.coeff(i);
    }
    return {this, std::move(acc)};
}

RatPoly FrobAlg::min_poly(const AlgElement& a) const {
    // Krylov chain from the unit: the first linear dependency among
    // 1, a, a^2, ... gives the minimal polynomial (the unit is a cyclic
    // vector for the subalgebra generated by a).
    std::vector<RatVec> reduced;          // echelonized rows
    std::vector<int> lead;                // leading index per row
    std::vector<std::vector<Rat>> combos; // expression of each power in terms of reduced rows
    RatVec power = RatVec::Zero(dim_);
    power(0) = Rat(1);
    std::vector<RatVec> powers;
    for (int k = 0;; ++k) {
        RatVec v = power;
        // reduce v against existing rows, remembering coefficients in
        // terms of the original powers
        std::vector<Rat> expr(powers.size() + 1, Rat(0));
        expr.back() = Rat(1);
        for (size_t rix = 0; rix < reduced.size(); ++rix) {
            Rat pivotval = v(lead[rix]);
            if (sign_of(pivotval) == 0) continue;
            Rat f = pivotval / reduced[rix](lead[rix]);
            v -= f * reduced[rix];
            for (size_t t = 0; t < combos[rix].size(); ++t) expr[t] -= f * combos[rix][t];
        }
        int lv = -1;
        for (int i = 0; i < dim_; ++i) {
            if (sign_of(v(i)) != 0) {
                lv = i;
                break;
            }
        }
        if (lv < 0) {
            // 0 = sum expr[t]*a^t with expr[k] = 1: expr is the monic
            // minimal polynomial
            return RatPoly(std::move(expr));
        }
        reduced.push_back(v);
        lead.push_back(lv);
        combos.push_back(expr);
        powers.push_back(power);
        power = mult(power, a.coords);
    }
}

FrobAlg FrobAlg::with_struct_const(int i, int j, int k, std::int32_t v) const {
    FrobAlg copy = *this;
    copy.table_[copy.idx(i, j, k)] = v;
    copy.finish();
    return copy;
}

std::string algebra_to_json(const FrobAlg& a) {
    nlohmann::ordered_json j;
    j["schema"] = "signed-verlinde-algebra/1";
    j["r"] = a.params().r;
    j["s"] = a.params().s;
    j["plus"] = a.is_even_part();
    j["dim"] = a.dim();
    j["labels"] = a.labels();
    j["eta_diag"] = a.eta_diag();
    nlohmann::ordered_json sc = nlohmann::ordered_json::array();
    for (int i = 0; i < a.dim(); ++i) {
        for (int jj = 0; jj < a.dim(); ++jj) {
            for (int k = 0; k < a.dim(); ++k) {
                std::int32_t c = a.struct_const(i, jj, k);
                if (c != 0) sc.push_back({i, jj, k, c});
            }
        }
    }
    j["struct_consts"] = std::move(sc);
    return j.dump(2);
}

FrobAlg algebra_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("schema").get<std::string>() != "signed-verlinde-algebra/1") {
        throw std::invalid_argument("unknown algebra schema");
    }
    Params p(j.at("r").get<int>(), j.at("s").get<int>());
    bool plus = j.at("plus").get<bool>();
    std::vector<int> labels = j.at("labels").get<std::vector<int>>();
    std::vector<int> eta = j.at("eta_diag").get<std::vector<int>>();
    int dim = j.at("dim").get<int>();
    if (static_cast<int>(labels.size()) != dim) throw std::invalid_argument("bad dimension");
    std::vector<std::int32_t> table(static_cast<size_t>(dim) * dim * dim, 0);
    for (const auto& row : j.at("struct_consts")) {
        int i = row.at(0).get<int>();
        int jj = row.at(1).get<int>();
        int k = row.at(2).get<int>();
        std::int32_t c = row.at(3).get<std::int32_t>();
        if (i < 0 || jj < 0 || k < 0 || i >= dim || jj >= dim || k >= dim) {
            throw std::invalid_argument("structure constant index out of range");
        }
        table[(static_cast<size_t>(i) * dim + jj) * dim + k] = c;
    }
    return FrobAlg::from_raw(p, plus, std::move(labels), std::move(eta), std::move(table));
}

}  // namespace vr
