#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace orbiseif {

// A permutation together with an orientation sign. Product is composition:
// (a*b)(x) = a(b(x)).
struct SignedPerm {
    std::vector<std::uint8_t> perm;
    int sign = 1;

    static SignedPerm identity(int degree, int sign = 1);
    static SignedPerm from_cycles(int degree, const std::vector<std::vector<int>>& cycles,
                                  int sign = 1);
    SignedPerm operator*(const SignedPerm& o) const;
    SignedPerm inverse() const;
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

struct Fingerprint {
    std::size_t order = 0;
    std::map<int, int> order_histogram;
    bool abelian = false;
    std::size_t center_order = 0;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Finite group of signed permutations with a full multiplication table.
class FiniteGroup {
public:
    // Throws Error("closure") when the generated group exceeds cap.
    static FiniteGroup generate(const std::vector<SignedPerm>& gens, std::size_t cap = 4096);

    std::size_t order() const { return elems_.size(); }
    const SignedPerm& element(int i) const { return elems_[i]; }
    int mul(int a, int b) const { return table_[a * elems_.size() + b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return 0; }
    int index_of(const SignedPerm& p) const;  // -1 if absent
    int element_order(int a) const;

    // subset queries; subsets are lists of element indices
    std::vector<int> all() const;
    std::vector<int> generated_by(const std::vector<int>& gens) const;
    std::vector<int> orientation_preserving() const;
    Fingerprint fingerprint(const std::vector<int>& subgroup) const;
    Fingerprint fingerprint() const { return fingerprint(all()); }
    // conjugacy classes of the subgroup acting on itself
    std::vector<std::vector<int>> conjugacy_classes(const std::vector<int>& subgroup) const;
    // inclusion-maximal abelian normal subgroups of the subgroup, each sorted
    std::vector<std::vector<int>> maximal_abelian_normal(const std::vector<int>& subgroup) const;

private:
    std::vector<SignedPerm> elems_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::unordered_map<std::uint64_t, std::vector<int>> lookup_;
    static std::uint64_t hash(const SignedPerm& p);
};

}  // namespace orbiseif
