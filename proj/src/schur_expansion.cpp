#include "invvec/schur_expansion.hpp"

#include <stdexcept>

namespace invvec {

void SchurExpansion::add(const Partition& key, const Int& delta) {
    if (key.n() != degree_)
        throw std::domain_error("SchurExpansion::add: key has degree " +
                                std::to_string(key.n()) + ", expansion has degree " +
                                std::to_string(degree_));
    if (delta == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, delta);
    if (!inserted) {
        it->second += delta;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string to_tsv(const SchurExpansion& f) {
    std::string out;
    for (const auto& [key, coeff] : f.terms()) {
        out += coeff.str();
        out += '\t';
        out += key.to_string();
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const SchurExpansion& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coeff] : f.terms())
        terms.push_back({{"coefficient", coeff.str()}, {"partition", key.to_string()}});
    return terms;
}

} // namespace invvec
