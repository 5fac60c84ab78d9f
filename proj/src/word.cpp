#include "ifs_cstar/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ifs_cstar {

IndexWord operator*(const IndexWord& outer, const IndexWord& inner) {
  std::vector<int> letters = outer.letters_;
  letters.insert(letters.end(), inner.letters_.begin(), inner.letters_.end());
  return IndexWord(std::move(letters));
}

bool IndexWord::is_prefix_of(const IndexWord& other) const {
  return size() <= other.size() && std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

IndexWord IndexWord::outer(std::size_t n) const {
  if (n > size()) throw std::out_of_range("word shorter than requested prefix");
  return IndexWord(std::vector<int>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

IndexWord IndexWord::strip(std::size_t n) const {
  if (n > size()) throw std::out_of_range("word shorter than requested strip");
  return IndexWord(std::vector<int>(letters_.begin() + static_cast<std::ptrdiff_t>(n), letters_.end()));
}

std::vector<IndexWord> IndexWord::all_of_length(std::size_t length, int alphabet) {
  std::vector<IndexWord> out;
  std::vector<int> letters(length, 1);
  while (true) {
    out.emplace_back(letters);
    std::size_t i = length;
    while (i > 0 && letters[i - 1] == alphabet) letters[--i] = 1;
    if (i == 0) break;
    ++letters[i - 1];
  }
  return out;
}

std::vector<IndexWord> IndexWord::all_up_to_length(std::size_t length, int alphabet) {
  std::vector<IndexWord> out;
  for (std::size_t n = 0; n <= length; ++n) {
    auto words = all_of_length(n, alphabet);
    out.insert(out.end(), words.begin(), words.end());
  }
  return out;
}

std::string to_string(const IndexWord& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

}  // namespace ifs_cstar
