#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fgt/matrix.hpp"
#include "fgt/perm_group.hpp"

namespace fgt {

struct Letter {
  std::uint32_t gen;
  std::int64_t exp;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word over generator indices.
class Word {
 public:
  Word() = default;
  static Word gen(std::uint32_t g, std::int64_t e = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const;  // sum of |exp|
  Word inverse() const;
  Word pow(std::int64_t e) const;
  void append(std::uint32_t g, std::int64_t e);

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// a^b = b^-1 a b and (a,b) = a^-1 b^-1 a b.
Word conjugate(const Word& a, const Word& b);
Word commutator(const Word& a, const Word& b);

using Params = std::map<std::string, std::int64_t>;

struct Presentation {
  std::vector<std::string> alphabet;
  std::vector<Word> relators;
  Params params;
  // Source text of the relator section, kept for printing.
  std::string relator_text;
};

// "a^8=b^2=a^b*a^{-3}=1" style chains separated by top-level commas.
std::vector<Word> parse_relators(std::string_view text, const std::vector<std::string>& alphabet,
                                 const Params& params);
Word parse_word(std::string_view text, const std::vector<std::string>& alphabet,
                const Params& params = {});
// Integer expression over the parameters with + - * / ^ and parentheses;
// division must be exact.
std::int64_t parse_int_expr(std::string_view text, const Params& params);

// Full form "pres{a,b; a^8=b^2=a^b*a=1; p=3, x=1}" or the same without the
// "pres{...}" wrapper. Parameters may refer to earlier parameters. Values in
// `overrides` replace or add parameters before relators are expanded.
Presentation parse_presentation(std::string_view text, const Params& overrides = {});
std::string print_presentation(const Presentation& p);

std::string word_to_string(const Word& w, const std::vector<std::string>& alphabet);

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images);
Permutation evaluate_word(const Word& w, const std::vector<std::string>& alphabet,
                          const std::map<std::string, Permutation>& images);
Elem evaluate_word(const Word& w, const ElementTable& t, const std::vector<Elem>& images);
MatGF evaluate_word(const Word& w, const std::vector<MatGF>& images);

bool check_relators(const Presentation& pres, const std::vector<Permutation>& images);
bool check_relators(const Presentation& pres, const ElementTable& t,
                    const std::vector<Elem>& images);
bool check_relators(const Presentation& pres, const std::vector<MatGF>& images);

constexpr std::size_t kDefaultMaxCosets = 200000;

struct CosetTable {
  std::size_t index = 0;
  // rows[c][2g] = c*g, rows[c][2g+1] = c*g^-1; coset 0 is the subgroup.
  std::vector<std::vector<std::uint32_t>> rows;
  PermutationGroup group;  // action of the generators on the cosets
};

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup = {},
                        std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace fgt
