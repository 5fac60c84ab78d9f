#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ifs_cstar {

// A finite index sequence (k_n, ..., k_1) over {1..N}, stored outermost
// letter first: the word denotes gamma_{k_n} o ... o gamma_{k_1}, so the last
// stored letter is applied first. The empty word is the identity.
class IndexWord {
 public:
  IndexWord() = default;
  explicit IndexWord(std::vector<int> letters) : letters_(std::move(letters)) {}
  IndexWord(std::initializer_list<int> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  // outer * inner applies inner first.
  friend IndexWord operator*(const IndexWord& outer, const IndexWord& inner);

  // Initial segment = shared outermost letters.
  bool is_prefix_of(const IndexWord& other) const;
  // The n outermost letters.
  IndexWord outer(std::size_t n) const;
  // Drops the n outermost letters (what remains is applied first).
  IndexWord strip(std::size_t n) const;

  // Enumerates all words of exactly the given length, lexicographically.
  static std::vector<IndexWord> all_of_length(std::size_t length, int alphabet);
  static std::vector<IndexWord> all_up_to_length(std::size_t length, int alphabet);

  friend bool operator==(const IndexWord&, const IndexWord&) = default;
  friend auto operator<=>(const IndexWord&, const IndexWord&) = default;

 private:
  std::vector<int> letters_;
};

// "()" or "(2,1)".
std::string to_string(const IndexWord& w);

}  // namespace ifs_cstar
