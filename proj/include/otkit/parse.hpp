#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "otkit/fwd.hpp"
#include "otkit/term.hpp"

namespace otkit {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t at)
      : std::runtime_error(msg + " at offset " + std::to_string(at)),
        pos(at) {}
};

namespace detail {

class Parser {
 public:
  Parser(const std::string& src, const Cfg& cfg) : s_(src), cfg_(cfg) {}

  TPtr fullTerm() {
    TPtr t = term();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

  EPtr fullETerm() {
    EPtr e = eterm();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  const std::string& s_;
  Cfg cfg_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool eat(const char* word) {
    skip();
    size_t n = 0;
    while (word[n]) ++n;
    if (s_.compare(pos_, n, word) != 0) return false;
    pos_ += n;
    return true;
  }

  // Plus-chains are folded with ordinal addition, so weakly decreasing
  // normal-form inputs round-trip unchanged.
  TPtr term() {
    TPtr t = atom();
    while (peek() == '+') {
      ++pos_;
      t = termAdd(t, atom());
    }
    return t;
  }

  TPtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '0') {
      ++pos_;
      return tZero();
    }
    if (c == 'K') {
      ++pos_;
      return tKappa();
    }
    if (eat("w^(")) {
      TPtr b = term();
      expect(')');
      return tWExp(b);
    }
    if (eat("phi(")) {
      TPtr b = term();
      expect(',');
      TPtr g = term();
      expect(')');
      return tPhi(b, g);
    }
    if (eat("Om(")) {
      TPtr b = term();
      expect(')');
      return tOmIdx(b);
    }
    if (eat("psi(")) return psiTail();
    fail("expected a term");
  }

  TPtr psiTail() {
    TPtr pi = term();
    expect(';');
    // Either "vec; arg)" or just "arg)". Try the vector reading first and
    // fall back on failure.
    size_t save = pos_;
    try {
      std::vector<EPtr> vec = evec();
      expect(';');
      TPtr a = term();
      expect(')');
      if (static_cast<int>(vec.size()) != cfg_.vecLen())
        fail("vector arity: expected " + std::to_string(cfg_.vecLen()) +
             " entries");
      return tPsi(pi, std::move(vec), a);
    } catch (const ParseError&) {
      pos_ = save;
    }
    TPtr a = term();
    expect(')');
    return tPsi(pi, zeroVec(cfg_), a);
  }

  std::vector<EPtr> evec() {
    std::vector<EPtr> out;
    out.push_back(eterm());
    while (peek() == ',') {
      ++pos_;
      out.push_back(eterm());
    }
    return out;
  }

  EPtr eterm() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '0') {
      ++pos_;
      return eZero();
    }
    if (c == '<') return tripleTail();
    if (c == 'L') {
      std::vector<EMono> ms;
      ms.push_back(mono());
      while (peek() == '+') {
        ++pos_;
        ms.push_back(mono());
      }
      // Monomial exponents must strictly descend.
      for (size_t i = 0; i + 1 < ms.size(); ++i)
        if (ecmp(ms[i].exp, ms[i + 1].exp) != GT)
          fail("monomial exponents must be strictly decreasing");
      return eSum(std::move(ms));
    }
    fail("expected an exponential term");
  }

  EPtr tripleTail() {
    expect('<');
    TPtr b = term();
    expect(',');
    TPtr pi = term();
    expect(',');
    TPtr a = term();
    expect('>');
    return eTriple(b, pi, a);
  }

  EMono mono() {
    if (!eat("L^(")) fail("expected 'L^('");
    EPtr e = eterm();
    expect(')');
    expect('*');
    expect('<');
    TPtr b = term();
    expect(',');
    TPtr pi = term();
    expect(',');
    TPtr a = term();
    expect('>');
    return EMono{e, b, pi, a};
  }
};

}  // namespace detail

inline TPtr parse(const std::string& src, const Cfg& cfg = Cfg()) {
  return detail::Parser(src, cfg).fullTerm();
}

inline EPtr parseE(const std::string& src, const Cfg& cfg = Cfg()) {
  return detail::Parser(src, cfg).fullETerm();
}

}  // namespace otkit
