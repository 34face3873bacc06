#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phigroup {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 2000;
inline constexpr std::size_t kFullAssociativityLimit = 512;

/// Size limits and associativity policy applied when a table is validated.
/// Associativity is checked on every triple up to `full_associativity_limit`
/// (never lowered below 512) and on `spot_checks` random triples above it.
struct GroupLimits {
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t full_associativity_limit = kFullAssociativityLimit;
  std::size_t spot_checks = 200000;
  std::uint64_t seed = 0x5eed'0f'9a0bULL;
};

enum class AxiomFailure { NotSquare, NotClosed, NoIdentity, NoInverse, NotAssociative };

const char* to_string(AxiomFailure failure) noexcept;

/// A Cayley table failed one of the group axioms. `witnesses` names the
/// offending indices: (row, column) for NotClosed, (i) for NoInverse and
/// (i, j, k) for NotAssociative.
class GroupAxiomError : public std::runtime_error {
 public:
  GroupAxiomError(AxiomFailure failure, std::vector<std::size_t> witnesses, const std::string& what)
      : std::runtime_error(what), failure_(failure), witnesses_(std::move(witnesses)) {}

  AxiomFailure failure() const noexcept { return failure_; }
  const std::vector<std::size_t>& witnesses() const noexcept { return witnesses_; }

 private:
  AxiomFailure failure_;
  std::vector<std::size_t> witnesses_;
};

class OrderCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Throws OrderCapExceeded when `order` is above the cap.
void check_order_cap(std::size_t order, const GroupLimits& limits);

/// A finite group given by its Cayley table. Immutable; copies share the
/// table, so passing by value is cheap.
class FiniteGroup {
 public:
  /// Validates `table` (square, entries in range, `identity` is two-sided,
  /// inverses exist, associativity) and throws GroupAxiomError naming the
  /// first violated axiom.
  static FiniteGroup from_cayley(const std::vector<std::vector<std::int64_t>>& table,
                                 std::int64_t identity, std::string name = {},
                                 std::vector<std::string> labels = {},
                                 const GroupLimits& limits = {});

  /// Row-major variant: entry i*n + j is the product of i and j.
  static FiniteGroup from_flat(std::size_t n, std::vector<Element> table, Element identity,
                               std::string name = {}, std::vector<std::string> labels = {},
                               const GroupLimits& limits = {});

  std::size_t order() const noexcept { return impl_->n; }
  Element identity() const noexcept { return impl_->identity; }
  const std::string& name() const noexcept { return impl_->name; }
  /// Display label; falls back to the decimal index.
  std::string label(Element g) const;
  const std::vector<std::string>& labels() const noexcept { return impl_->labels; }

  Element mul(Element a, Element b) const noexcept { return impl_->table[std::size_t{a} * impl_->n + b]; }
  Element inverse(Element g) const;
  Element power(Element g, std::uint64_t k) const;

  /// Smallest m >= 1 with g^m = e. Throws std::out_of_range on a bad index.
  std::uint64_t element_order(Element g) const;
  std::span<const std::uint64_t> element_orders() const noexcept { return impl_->orders; }

  bool valid(Element g) const noexcept { return g < impl_->n; }
  void require_valid(Element g) const;

  /// Token shared by all copies of this group; used to tie subgroups to
  /// their parent.
  std::uint64_t id() const noexcept { return impl_->id; }

  std::vector<std::vector<Element>> table_rows() const;
  std::span<const Element> flat_table() const noexcept { return impl_->table; }

  /// Same table under a different display name.
  FiniteGroup renamed(std::string name) const;

 private:
  struct Impl {
    std::size_t n = 0;
    std::vector<Element> table;
    Element identity = 0;
    std::vector<Element> inverses;
    std::vector<std::uint64_t> orders;
    std::vector<std::string> labels;
    std::string name;
    std::uint64_t id = 0;
  };

  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// A subgroup of a specific FiniteGroup, stored as a sorted member list.
class Subgroup {
 public:
  /// Validates that `members` is a subgroup of `parent` (identity,
  /// closure, inverses); throws std::invalid_argument otherwise.
  static Subgroup make(const FiniteGroup& parent, std::vector<Element> members);

  std::span<const Element> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element g) const noexcept;
  bool is_subset_of(const Subgroup& other) const;

  std::uint64_t parent_id() const noexcept { return parent_id_; }
  std::size_t parent_order() const noexcept { return parent_order_; }
  std::size_t index() const noexcept { return parent_order_ / members_.size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.parent_id_ == b.parent_id_ && a.members_ == b.members_;
  }

 private:
  Subgroup(std::uint64_t parent_id, std::size_t parent_order, std::vector<Element> members)
      : parent_id_(parent_id), parent_order_(parent_order), members_(std::move(members)) {}

  friend Subgroup unchecked_subgroup(const FiniteGroup&, std::vector<Element>);

  std::uint64_t parent_id_;
  std::size_t parent_order_;
  std::vector<Element> members_;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

/// Smallest subgroup containing `gens` (an empty list gives the trivial
/// subgroup).
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);
/// <x>, listed as powers then sorted.
Subgroup cyclic_subgroup(const FiniteGroup& g, Element x);

bool is_cyclic(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const FiniteGroup& g);

/// Sum over the elements of the totient of the element order.
std::uint64_t phi_of_group(const FiniteGroup& g);

/// Number of elements of each order d, indexed by d (size |G| + 1).
std::vector<std::size_t> order_census(const FiniteGroup& g);

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// A Sylow q-subgroup, grown from the cyclic subgroup of a q-element of
/// maximal order by adjoining q-elements of the normalizer. Trivial when q
/// does not divide |G|. Throws std::invalid_argument if q is not prime.
Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t q);

/// Number of Sylow q-subgroups, as the index of the normalizer of one.
/// Throws std::invalid_argument if q is not prime or does not divide |G|.
std::size_t count_sylow(const FiniteGroup& g, std::uint64_t q);

/// True iff the index of `h` equals the full p-part of |G|.
bool is_p_complement(const FiniteGroup& g, const Subgroup& h, std::uint64_t p);

}  // namespace phigroup
