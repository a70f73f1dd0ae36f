#include "loopalg/signature.hpp"

#include <stdexcept>

namespace loopalg {

int kind_rank(GenKind k) {
    switch (k) {
    case GenKind::alpha: return 0;
    case GenKind::beta: return 1;
    case GenKind::gamma: return 2;
    case GenKind::delta: return 3;
    case GenKind::tensor_letter: return 4;
    }
    return 5;
}

char kind_letter(GenKind k) {
    switch (k) {
    case GenKind::alpha: return 'a';
    case GenKind::beta: return 'b';
    case GenKind::gamma: return 'g';
    case GenKind::delta: return 'd';
    case GenKind::tensor_letter: return 'w';
    }
    return '?';
}

Signature Signature::surface(int genus, int boundary_extra) {
    if (genus < 0 || boundary_extra < 0)
        throw std::invalid_argument("surface signature needs g >= 0 and n >= 0");
    if (genus == 0 && boundary_extra == 0)
        throw std::invalid_argument(
            "degenerate surface: genus 0 with a single boundary component has no generators");
    if (boundary_extra > 120 || genus > 8000)
        throw std::invalid_argument("surface signature too large");
    Signature sig;
    sig.objects_ = boundary_extra + 1;
    sig.genus_ = genus;
    sig.boundary_extra_ = boundary_extra;
    sig.invertible_ = true;
    for (int i = 1; i <= genus; ++i)
        sig.gens_.push_back({GenKind::alpha, i, 0, 0});
    for (int i = 1; i <= genus; ++i)
        sig.gens_.push_back({GenKind::beta, i, 0, 0});
    for (int j = 1; j <= boundary_extra; ++j)
        sig.gens_.push_back({GenKind::gamma, j, 0, 0});
    // d_j runs from object j to object 0; this is the orientation that makes
    // 1_j d_j = d_j and d_j 1_j = 0 in the category algebra.
    for (int j = 1; j <= boundary_extra; ++j)
        sig.gens_.push_back({GenKind::delta, j, j, 0});
    return sig;
}

Signature Signature::tensor_algebra(int dim) {
    if (dim < 1 || dim > 26)
        throw std::invalid_argument("tensor algebra dimension must be in 1..26");
    Signature sig;
    sig.objects_ = 1;
    sig.invertible_ = false;
    for (int i = 1; i <= dim; ++i)
        sig.gens_.push_back({GenKind::tensor_letter, i, 0, 0});
    return sig;
}

int Signature::find(GenKind kind, int index) const {
    for (int id = 0; id < num_generators(); ++id)
        if (gens_[std::size_t(id)].kind == kind && gens_[std::size_t(id)].index == index)
            return id;
    return -1;
}

Letter Signature::letter(int id, int exp) const {
    if (id < 0 || id >= num_generators())
        throw std::out_of_range("generator id out of range");
    if (exp != 1 && exp != -1)
        throw std::invalid_argument("letter exponent must be +1 or -1");
    if (exp == -1 && !invertible_)
        throw std::invalid_argument("tensor-algebra letters are not invertible");
    const Generator& g = gens_[std::size_t(id)];
    if (exp == 1)
        return Letter{int16_t(id), 1, int8_t(g.source), int8_t(g.target)};
    return Letter{int16_t(id), -1, int8_t(g.target), int8_t(g.source)};
}

std::string Signature::gen_name(int id) const {
    const Generator& g = gens_[std::size_t(id)];
    return std::string(1, kind_letter(g.kind)) + std::to_string(g.index);
}

Signature make_surface(int genus, int boundary_extra) {
    return Signature::surface(genus, boundary_extra);
}

} // namespace loopalg
