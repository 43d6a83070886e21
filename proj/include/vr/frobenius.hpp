#pragma once

// The signed Verlinde algebra V_q on colors 0..r-2 and its even part,
// built from the sign sequence: structure constants are the signs of
// the triple symbols twisted by the diagonal pairing eta. Elements are
// rational coordinate vectors; a parallel integer path serves the
// exhaustive table checks.

#include "vr/matrix.hpp"
#include "vr/params.hpp"
#include "vr/poly.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace vr {

class FrobAlg;

struct AlgElement {
    const FrobAlg* alg = nullptr;
    RatVec coords;

    Rat epsilon() const { return coords(0); }
};

AlgElement operator+(const AlgElement& a, const AlgElement& b);
AlgElement operator-(const AlgElement& a, const AlgElement& b);
AlgElement operator*(const AlgElement& a, const AlgElement& b);
AlgElement operator*(const Rat& s, const AlgElement& a);
AlgElement operator-(const AlgElement& a);
bool operator==(const AlgElement& a, const AlgElement& b);

class FrobAlg {
  public:
    // V_q: dimension r-1, basis labels 0..r-2
    static FrobAlg build_full(const SignSeq& seq);
    // even part: dimension (r-1)/2, basis labels 0,2,..,r-3
    static FrobAlg build_even(const FrobAlg& full);
    // reassemble from serialized data (labels/eta/table as dumped)
    static FrobAlg from_raw(Params p, bool plus, std::vector<int> labels,
                            std::vector<int> eta, std::vector<std::int32_t> table);

    int dim() const { return dim_; }
    bool is_even_part() const { return plus_; }
    const Params& params() const { return seq_.params(); }
    const SignSeq& signs() const { return seq_; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<int>& eta_diag() const { return eta_; }

    std::int32_t struct_const(int i, int j, int k) const {
        return table_[idx(i, j, k)];
    }
    const std::int32_t* row(int i, int j) const { return table_.data() + idx(i, j, 0); }

    long long trace_basis(int k) const { return tau_[static_cast<size_t>(k)]; }

    AlgElement unit() const { return basis(0); }
    AlgElement basis(int position) const;
    AlgElement element(RatVec coords) const;
    AlgElement from_int_coords(const std::vector<long long>& v) const;

    // product of coordinate vectors through the structure constants
    RatVec mult(const RatVec& a, const RatVec& b) const;
    std::vector<long long> mult_int(const std::vector<long long>& a,
                                    const std::vector<long long>& b) const;

    RatMat mult_matrix(const RatVec& a) const;
    IntMat mult_matrix_int(const std::vector<long long>& a) const;

    Rat trace_mult(const RatVec& a) const;

    // distinguished elements of the full algebra (x = e_1, y = e_2,
    // w = eps_2 e_{r-3}, iota = e_{r-2}); y and w require r >= 5
    AlgElement gen_x() const;
    AlgElement gen_y() const;
    AlgElement gen_w() const;
    AlgElement gen_iota() const;

    // w and y seen inside the even part
    AlgElement even_w() const;
    AlgElement even_y() const;

    // handle element: sum of e_i^2 / eta(e_i,e_i)
    AlgElement omega() const;
    std::vector<long long> omega_int() const;

    AlgElement evaluate(const RatPoly& f, const AlgElement& a) const;
    RatPoly min_poly(const AlgElement& a) const;

    // test hook: returns a copy with one structure constant overwritten
    FrobAlg with_struct_const(int i, int j, int k, std::int32_t v) const;

    friend bool operator==(const FrobAlg& a, const FrobAlg& b) {
        return a.plus_ == b.plus_ && a.labels_ == b.labels_ && a.eta_ == b.eta_ &&
               a.table_ == b.table_;
    }

  private:
    FrobAlg(SignSeq seq, bool plus) : seq_(std::move(seq)), plus_(plus) {}

    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)) *
                   static_cast<size_t>(dim_) +
               static_cast<size_t>(k);
    }

    void finish();  // traces + basic invariants

    SignSeq seq_;
    bool plus_ = false;
    int dim_ = 0;
    std::vector<int> labels_;
    std::vector<int> eta_;
    std::vector<std::int32_t> table_;
    std::vector<long long> tau_;
};

// JSON serialization of an algebra (schema "signed-verlinde-algebra/1",
// structure constants as sparse (i,j,k,c) rows ordered by (i,j,k)).
std::string algebra_to_json(const FrobAlg& a);
FrobAlg algebra_from_json(const std::string& text);

}  // namespace vr
