#pragma once

#include "loopalg/word.hpp"

#include <string>
#include <vector>

namespace loopalg {

enum class GenKind : uint8_t { alpha, beta, gamma, delta, tensor_letter };

// Rank used by the canonical letter order; generator ids are handed out in
// this order, so comparing ids is the same as comparing (kind, index).
int kind_rank(GenKind k);
char kind_letter(GenKind k);

struct Generator {
    GenKind kind;
    int index; // 1-based within its kind
    int source;
    int target;
};

// Generator inventory of the ambient algebra. Two flavours share all of the
// machinery:
//  - the free surface groupoid of genus g with n+1 boundary components:
//    objects {0..n}, invertible generators a_i, b_i (1<=i<=g) and g_j
//    (1<=j<=n) looping at object 0, and d_j from object j to object 0;
//  - the tensor algebra on m letters: one object, non-invertible w_1..w_m.
class Signature {
public:
    // Degenerate surfaces (g = n = 0) have no generators and are rejected.
    static Signature surface(int genus, int boundary_extra);
    // letters w1..wm, 1 <= m <= 26
    static Signature tensor_algebra(int dim);

    bool invertible_letters() const { return invertible_; }
    int num_objects() const { return objects_; }
    int num_generators() const { return int(gens_.size()); }
    const Generator& gen(int id) const { return gens_[std::size_t(id)]; }
    const std::vector<Generator>& generators() const { return gens_; }

    int genus() const { return genus_; }
    int boundary_extra() const { return boundary_extra_; }

    // -1 when the (kind, index) pair is not part of this signature.
    int find(GenKind kind, int index) const;

    Letter letter(int id, int exp = 1) const;
    Word gen_word(int id, int exp = 1) const { return Word::of_letter(letter(id, exp)); }

    std::string gen_name(int id) const;

private:
    Signature() = default;
    std::vector<Generator> gens_;
    int objects_ = 1;
    int genus_ = 0;
    int boundary_extra_ = 0;
    bool invertible_ = true;
};

Signature make_surface(int genus, int boundary_extra);

} // namespace loopalg
