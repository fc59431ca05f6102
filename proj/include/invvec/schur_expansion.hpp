#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "invvec/bigint.hpp"
#include "invvec/partition.hpp"

namespace invvec {

/// A sparse integer combination of Schur functions, homogeneous of a fixed
/// degree n.  Also reused for power-sum expansions, so coefficients may be
/// negative.  Zero coefficients are never stored; keys iterate in the
/// partitions' canonical order, so printed expansions are deterministic.
class SchurExpansion {
  public:
    explicit SchurExpansion(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, Int>& terms() const { return terms_; }
    bool has(const Partition& key) const { return terms_.count(key) != 0; }

    /// Coefficient of s_key, 0 when absent.
    Int coefficient(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Adds delta to the coefficient of s_key, erasing it when it becomes 0.
    void add(const Partition& key, const Int& delta);

    friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) = default;

  private:
    int degree_;
    std::map<Partition, Int> terms_;
};

/// One term per line: "<coeff>\t<partition>\n", canonical key order.
std::string to_tsv(const SchurExpansion& f);

/// Array of {"coefficient": "<decimal string>", "partition": "<text>"} in
/// canonical key order.  Coefficients are strings so arbitrary precision
/// survives JSON round-trips.
nlohmann::json to_json(const SchurExpansion& f);

} // namespace invvec
