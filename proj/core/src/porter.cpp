#include "nctk/porter.hpp"

#include <array>
#include <span>
#include <utility>

namespace nctk {

namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string_view w) : b_(w) {}

  std::string run() {
    if (b_.size() <= 2) return b_;
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return b_;
  }

 private:
  std::string b_;
  std::size_t j_ = 0;  // end of the stem under consideration (exclusive)

  bool cons(std::size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u': return false;
      case 'y': return i == 0 ? true : !cons(i - 1);
      default: return true;
    }
  }

  // number of VC sequences in b_[0, j_)
  int m() const {
    int n = 0;
    std::size_t i = 0;
    while (true) {
      if (i >= j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i >= j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i >= j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (std::size_t i = 0; i < j_; ++i)
      if (!cons(i)) return true;
    return false;
  }

  bool double_cons(std::size_t i) const { return i >= 1 && b_[i] == b_[i - 1] && cons(i); }

  // cvc at i, where the last c is not w, x or y
  bool cvc(std::size_t i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = b_[i];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    if (s.size() > b_.size() || b_.compare(b_.size() - s.size(), s.size(), s) != 0) return false;
    j_ = b_.size() - s.size();
    return true;
  }

  void set_to(std::string_view s) { b_.replace(j_, b_.size() - j_, s); }
  void r(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  void step1ab() {
    if (b_.back() == 's') {
      if (ends("sses")) b_.resize(b_.size() - 2);
      else if (ends("ies")) set_to("i");
      else if (b_.size() >= 2 && b_[b_.size() - 2] != 's') b_.pop_back();
    }
    if (ends("eed")) {
      if (m() > 0) b_.pop_back();
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      b_.resize(j_);
      if (ends("at")) set_to("ate");
      else if (ends("bl")) set_to("ble");
      else if (ends("iz")) set_to("ize");
      else if (double_cons(b_.size() - 1)) {
        const char ch = b_.back();
        if (ch != 'l' && ch != 's' && ch != 'z') b_.pop_back();
      } else {
        j_ = b_.size();
        if (m() == 1 && cvc(b_.size() - 1)) b_ += 'e';
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_.back() = 'i';
  }

  void apply(std::span<const std::pair<std::string_view, std::string_view>> rules) {
    for (const auto& [from, to] : rules) {
      if (ends(from)) {
        r(to);
        return;
      }
    }
  }

  void step2() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 21> rules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},  {"anci", "ance"},  {"izer", "ize"},
        {"bli", "ble"},     {"alli", "al"},     {"entli", "ent"},  {"eli", "e"},      {"ousli", "ous"},
        {"ization", "ize"}, {"ation", "ate"},   {"ator", "ate"},   {"alism", "al"},   {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},   {"iviti", "ive"},  {"biliti", "ble"},
        {"logi", "log"},
    }};
    apply(rules);
  }

  void step3() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 7> rules{{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"}, {"ical", "ic"}, {"ful", ""}, {"ness", ""},
    }};
    apply(rules);
  }

  void step4() {
    static constexpr std::array<std::string_view, 19> suffixes{"al",   "ance", "ence", "er",  "ic",  "able", "ible",
                                                               "ant",  "ement", "ment", "ent", "ion", "ou",   "ism",
                                                               "ate",  "iti",  "ous",  "ive", "ize"};
    for (auto s : suffixes) {
      if (!ends(s)) continue;
      if (s == "ion" && !(j_ > 0 && (b_[j_ - 1] == 's' || b_[j_ - 1] == 't'))) return;
      if (m() > 1) b_.resize(j_);
      return;
    }
  }

  void step5() {
    j_ = b_.size();
    if (b_.back() == 'e') {
      j_ = b_.size() - 1;
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(b_.size() - 2))) b_.pop_back();
    }
    j_ = b_.size();
    if (b_.back() == 'l' && double_cons(b_.size() - 1) && m() > 1) b_.pop_back();
  }
};

}  // namespace

std::string porter_stem(std::string_view word) { return Stemmer(word).run(); }

}  // namespace nctk
