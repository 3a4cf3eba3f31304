#include "qcodes/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

#include "qcodes/numeric.hpp"

namespace qcodes {

std::uint64_t ord_mod(std::uint64_t q, std::uint64_t m) {
    require(m >= 2, Errc::invalid_modulus, "modulus must be >= 2");
    require(std::gcd(q, m) == 1, Errc::not_coprime,
            "gcd(" + std::to_string(q) + ", " + std::to_string(m) + ") != 1");
    std::uint64_t t = 1, x = q % m;
    while (x != 1) {
        x = mulmod_u64(x, q, m);
        ++t;
    }
    return t;
}

CosetFamily coset_family(std::uint64_t q, std::uint64_t m) {
    CosetFamily fam;
    fam.q = q;
    fam.m = m;
    fam.t = ord_mod(q, m);
    std::vector<char> seen(m, 0);
    std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> keyed;
    for (std::uint64_t a = 0; a < m; ++a) {
        if (seen[a]) continue;
        std::vector<std::uint64_t> coset;
        std::uint64_t x = a;
        while (!seen[x]) {
            seen[x] = 1;
            coset.push_back(x);
            x = mulmod_u64(x, q, m);
        }
        std::sort(coset.begin(), coset.end());
        keyed.emplace_back(coset.back(), std::move(coset));
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [rep, coset] : keyed) {
        fam.reps.push_back(rep);
        if (fam.t > 1 && coset.size() == fam.t) fam.A.push_back(rep);
        fam.cosets.push_back(std::move(coset));
    }
    return fam;
}

std::vector<std::uint64_t> CosetFamily::full_union() const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < cosets.size(); ++i)
        if (t > 1 && cosets[i].size() == t) out.insert(out.end(), cosets[i].begin(), cosets[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t CosetFamily::coset_index_of(std::uint64_t v) const {
    require(v < m, Errc::invalid_argument, "value out of range");
    for (std::size_t i = 0; i < cosets.size(); ++i)
        if (std::binary_search(cosets[i].begin(), cosets[i].end(), v)) return i;
    fail(Errc::construction_inconsistency, "cosets do not partition Z_m");
}

CosetSelection selection_from_cutoff(const CosetFamily& family, std::uint64_t cutoff) {
    require(std::binary_search(family.A.begin(), family.A.end(), cutoff), Errc::invalid_cutoff,
            "cutoff " + std::to_string(cutoff) + " is not a full-coset representative");
    CosetSelection s;
    s.family = &family;
    s.c = cutoff;
    for (std::size_t i = 0; i < family.cosets.size(); ++i) {
        if (family.cosets[i].size() != family.t || family.t == 1) continue;
        if (family.reps[i] <= cutoff) {
            s.reps.push_back(family.reps[i]);
            s.members.insert(s.members.end(), family.cosets[i].begin(), family.cosets[i].end());
        }
    }
    std::sort(s.members.begin(), s.members.end());
    ensure_consistent(!s.members.empty() && s.members.back() == cutoff,
                      "cutoff selection does not attain its maximum");
    return s;
}

CosetSelection selection_from_members(const CosetFamily& family,
                                      const std::vector<std::uint64_t>& members) {
    CosetSelection s;
    s.family = &family;
    if (members.empty()) return s;
    std::vector<std::uint64_t> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<char> chosen(family.cosets.size(), 0);
    for (auto v : sorted) chosen[family.coset_index_of(v)] = 1;
    std::vector<std::uint64_t> rebuilt;
    for (std::size_t i = 0; i < family.cosets.size(); ++i) {
        if (!chosen[i]) continue;
        require(family.t > 1 && family.cosets[i].size() == family.t, Errc::invalid_argument,
                "selection touches a non-full coset");
        s.reps.push_back(family.reps[i]);
        rebuilt.insert(rebuilt.end(), family.cosets[i].begin(), family.cosets[i].end());
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    require(rebuilt == sorted, Errc::invalid_argument,
            "member set is not a union of full cosets");
    s.members = std::move(rebuilt);
    s.c = s.members.back();
    return s;
}

std::vector<std::uint64_t> negate_set(const std::vector<std::uint64_t>& s, std::uint64_t m) {
    std::vector<std::uint64_t> out;
    out.reserve(s.size());
    for (auto v : s) out.push_back((m - v % m) % m);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> scale_set(const std::vector<std::uint64_t>& s, std::uint64_t l,
                                     std::uint64_t m) {
    require(std::gcd(l, m) == 1, Errc::not_coprime, "scaling factor not coprime to modulus");
    std::vector<std::uint64_t> out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(mulmod_u64(v % m, l % m, m));
    std::sort(out.begin(), out.end());
    return out;
}

bool hermitian_condition(const CosetSelection& s, std::uint64_t pe) {
    const CosetFamily& fam = *s.family;
    require(pe >= 2 && pe * pe == fam.q, Errc::not_a_square,
            "q = " + std::to_string(fam.q) + " is not the square of " + std::to_string(pe));
    std::vector<std::uint64_t> twisted = negate_set(scale_set(s.members, pe, fam.m), fam.m);
    std::vector<std::uint64_t> covered = s.members;
    covered.insert(covered.end(), twisted.begin(), twisted.end());
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    std::vector<std::uint64_t> frak = fam.full_union();
    return std::includes(covered.begin(), covered.end(), frak.begin(), frak.end());
}

}  // namespace qcodes
