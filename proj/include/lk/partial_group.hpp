#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lk/bits.hpp"
#include "lk/group.hpp"

namespace lk {

using Word = std::vector<int>;
using WordView = std::span<const int>;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Finite partial group on the index set {0, ..., size()-1}.
class PartialGroup {
public:
  virtual ~PartialGroup() = default;

  virtual std::size_t size() const = 0;
  virtual int one() const = 0;
  virtual int inv(int x) const = 0;
  virtual bool in_domain(WordView w) const = 0;
  // caller guarantees in_domain(w)
  virtual int product_unchecked(WordView w) const = 0;
  virtual std::string backend() const = 0;
  virtual std::string name(int x) const { return std::to_string(x); }
  // Non-empty when a structural argument makes bounded axiom checks complete.
  virtual std::optional<std::string> exactness_certificate() const { return std::nullopt; }

  int product(WordView w) const;
  // -1 when the word is not in D
  virtual int try_mul(int a, int b) const;
  virtual int try_conj(int x, int f) const;
  bool defined(int a, int b) const {
    int w[2] = {a, b};
    return in_domain(WordView(w, 2));
  }
  int mul(int a, int b) const {
    int w[2] = {a, b};
    return product_unchecked(WordView(w, 2));
  }
  // x ∈ D(f)
  bool conj_defined(int x, int f) const {
    int w[3] = {inv(f), x, f};
    return in_domain(WordView(w, 3));
  }
  int conj_unchecked(int x, int f) const {
    int w[3] = {inv(f), x, f};
    return product_unchecked(WordView(w, 3));
  }
  Bits all() const { return Bits::full(size()); }
  Bits none() const { return Bits(size()); }
  std::string word_name(WordView w) const;
  std::string set_name(const Bits &X, std::size_t limit = 12) const;
};

using PGPtr = std::shared_ptr<const PartialGroup>;

// A group given by a multiplication table; every word is in the domain.
class TablePG : public PartialGroup {
public:
  TablePG(std::vector<int> table, std::size_t n, std::vector<std::string> names = {});
  static std::shared_ptr<TablePG> from_group(const FiniteGroup &G, const Bits &H);

  std::size_t size() const override { return n_; }
  int one() const override { return one_; }
  int inv(int x) const override { return inv_[std::size_t(x)]; }
  bool in_domain(WordView) const override { return true; }
  int product_unchecked(WordView w) const override;
  std::string backend() const override { return "GroupBacked"; }
  std::string name(int x) const override;
  int try_mul(int a, int b) const override { return table_[std::size_t(a) * n_ + std::size_t(b)]; }
  // exhaustive associativity and inverse-law check on the table
  std::optional<std::string> exactness_certificate() const override;
  // test fixtures: overwrite one table entry
  void corrupt(int a, int b, int c) { table_[std::size_t(a) * n_ + std::size_t(b)] = c; }
  const std::vector<int> &embedding() const { return embed_; }

private:
  std::vector<int> table_;
  std::size_t n_;
  int one_ = 0;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::vector<int> embed_;
};

// Restriction of a partial group to a subset: D ∩ W(X).
class SubsetPG : public PartialGroup {
public:
  SubsetPG(PGPtr parent, const Bits &X);
  std::size_t size() const override { return elems_.size(); }
  int one() const override { return local_[std::size_t(parent_->one())]; }
  int inv(int x) const override { return local_[std::size_t(parent_->inv(elems_[std::size_t(x)]))]; }
  bool in_domain(WordView w) const override;
  int product_unchecked(WordView w) const override;
  std::string backend() const override { return "SubsetRestricted"; }
  std::string name(int x) const override { return parent_->name(elems_[std::size_t(x)]); }
  std::optional<std::string> exactness_certificate() const override;
  int to_parent(int x) const { return elems_[std::size_t(x)]; }
  int from_parent(int y) const { return local_[std::size_t(y)]; }
  const PartialGroup &parent() const { return *parent_; }

private:
  PGPtr parent_;
  std::vector<int> elems_;
  std::vector<int> local_;
};

// L/N with the inclusion-maximal cosets of N as elements.
class QuotientPG : public PartialGroup {
public:
  QuotientPG(PGPtr parent, const Bits &N);
  std::size_t size() const override { return cosets_.size(); }
  int one() const override { return proj_[std::size_t(parent_->one())]; }
  int inv(int x) const override;
  bool in_domain(WordView w) const override;
  int product_unchecked(WordView w) const override;
  std::string backend() const override { return "Quotient"; }
  std::string name(int x) const override;
  const std::vector<int> &projection() const { return proj_; }
  const std::vector<std::vector<int>> &cosets() const { return cosets_; }
  // empty when the maximal cosets partition the parent
  std::optional<std::string> partition_defect() const { return defect_; }

private:
  bool lift(WordView w, std::size_t i, Word &cur) const;
  PGPtr parent_;
  std::vector<std::vector<int>> cosets_;
  std::vector<int> proj_;
  std::optional<std::string> defect_;
};

class ProductPG : public PartialGroup {
public:
  ProductPG(PGPtr a, PGPtr b);
  std::size_t size() const override { return a_->size() * b_->size(); }
  int one() const override { return pack(a_->one(), b_->one()); }
  int inv(int x) const override { return pack(a_->inv(first(x)), b_->inv(second(x))); }
  bool in_domain(WordView w) const override;
  int product_unchecked(WordView w) const override;
  std::string backend() const override { return "DirectProduct"; }
  std::string name(int x) const override;
  std::optional<std::string> exactness_certificate() const override;
  int pack(int x, int y) const { return x * int(b_->size()) + y; }
  int first(int z) const { return z / int(b_->size()); }
  int second(int z) const { return z % int(b_->size()); }

private:
  PGPtr a_, b_;
};

// ---- operations ----

struct AxiomReport {
  bool ok = true;
  bool exact = false;
  int bound = 0;         // requested word length
  int exhaustive_to = 0; // all words up to this length were scanned
  std::size_t words = 0;
  std::string failed_axiom;
  std::optional<Word> witness;
  std::string note;
};

AxiomReport check_axioms(const PartialGroup &PG, int word_len_bound = 4,
                         std::size_t word_budget = 4'000'000);

Bits conj_domain(const PartialGroup &PG, int f);
int conjugate(const PartialGroup &PG, int x, int f);

Bits centralizer_p(const PartialGroup &PG, const Bits &X);
Bits normalizer_p(const PartialGroup &PG, const Bits &X);
Bits center(const PartialGroup &PG);

struct PairWitness {
  int x, y;
};
// nullopt: X commutes with Y; otherwise a failing pair
std::optional<PairWitness> commute_violation(const PartialGroup &PG, const Bits &X, const Bits &Y);
bool commutes(const PartialGroup &PG, const Bits &X, const Bits &Y);
std::optional<PairWitness> fix_violation(const PartialGroup &PG, const Bits &X, const Bits &Y);
bool fixes_under_conjugation(const PartialGroup &PG, const Bits &X, const Bits &Y);

Bits partial_subgroup_closure(const PartialGroup &PG, const Bits &X);
Bits normal_closure(const PartialGroup &PG, const Bits &X);

struct Violation {
  std::string what;
  Word word;
};
std::optional<Violation> partial_subgroup_violation(const PartialGroup &PG, const Bits &X);
std::optional<Violation> partial_normal_violation(const PartialGroup &PG, const Bits &N);
bool is_partial_subgroup(const PartialGroup &PG, const Bits &X);
bool is_partial_normal(const PartialGroup &PG, const Bits &N);
// true when X is a subgroup: every word over X lies in D (checked up to length 3)
bool is_group_subset(const PartialGroup &PG, const Bits &X);

std::shared_ptr<QuotientPG> quotient(PGPtr PG, const Bits &N);

struct HomReport {
  bool ok = true;
  std::optional<Word> witness;
  std::string what;
};
HomReport check_homomorphism(const PartialGroup &A, const PartialGroup &B,
                             const std::vector<int> &map, int word_len_bound = 3,
                             std::size_t word_budget = 2'000'000);
bool is_homomorphism(const PartialGroup &A, const PartialGroup &B, const std::vector<int> &map,
                     int word_len_bound = 3);
bool is_isomorphism(const PartialGroup &A, const PartialGroup &B, const std::vector<int> &map,
                    int word_len_bound = 3);

std::shared_ptr<ProductPG> direct_product(PGPtr a, PGPtr b);

struct CentralProductReport {
  bool ok = true;
  std::string failed; // "P", "C1", "C2"
  std::vector<Word> witness_rows;
  int width_checked = 0; // widths scanned exhaustively
  bool sampled = false;   // some wider width was sampled instead
};
CentralProductReport central_product_check(const PartialGroup &PG,
                                           const std::vector<Bits> &factors, int width_bound = 3,
                                           std::size_t matrix_budget = 4'000'000);
// Π over the factors in order, i.e. {Π(f1,...,fk) : (f1,...,fk) ∈ D}
Bits product_set(const PartialGroup &PG, const std::vector<Bits> &factors);

// Enumerate every word of the given length over the elements of X.
template <class F> void for_each_word(const std::vector<int> &alphabet, int len, F &&f) {
  if (len == 0) {
    Word w;
    f(w);
    return;
  }
  if (alphabet.empty()) return;
  std::vector<std::size_t> idx(std::size_t(len), 0);
  Word w(std::size_t(len), alphabet[0]);
  while (true) {
    if (!f(static_cast<const Word &>(w))) return;
    int k = len - 1;
    while (k >= 0) {
      if (++idx[std::size_t(k)] < alphabet.size()) {
        w[std::size_t(k)] = alphabet[idx[std::size_t(k)]];
        break;
      }
      idx[std::size_t(k)] = 0;
      w[std::size_t(k)] = alphabet[0];
      --k;
    }
    if (k < 0) return;
  }
}

} // namespace lk
