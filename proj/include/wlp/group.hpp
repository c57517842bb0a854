#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace wlp {

using Element = std::size_t;

/// A finite group given by its Cayley table. Elements are 0..order-1.
///
/// The group law is verified exhaustively at construction (closure,
/// identity, inverses, associativity), so every FiniteGroup instance is a
/// valid group.
class FiniteGroup {
public:
    /// `table[x * order + y]` is the product xy.
    FiniteGroup(std::size_t order, std::vector<Element> table, std::string name = {});

    static FiniteGroup cyclic(std::size_t n);
    /// Symmetric group on three letters, elements in lexicographic order of
    /// the permutations of {0,1,2}; element 0 is the identity.
    static FiniteGroup symmetric3();

    std::size_t order() const noexcept { return order_; }
    Element identity() const noexcept { return identity_; }
    Element mul(Element x, Element y) const { return table_[x * order_ + y]; }
    Element inv(Element x) const { return inverses_[x]; }
    std::span<const Element> table() const noexcept { return table_; }
    const std::string& name() const noexcept { return name_; }
    bool is_abelian() const;

private:
    std::size_t order_;
    std::vector<Element> table_;
    std::vector<Element> inverses_;
    Element identity_ = 0;
    std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

} // namespace wlp
