#pragma once

#include <sstream>
#include <string>

#include "otkit/term.hpp"

namespace otkit {

std::string print(TPtr t);
std::string print(EPtr e);

namespace detail {

inline void printTo(std::ostringstream& os, TPtr t);

inline void printTo(std::ostringstream& os, EPtr e) {
  switch (e->kind) {
    case Ek::Zero:
      os << '0';
      return;
    case Ek::Triple:
      os << '<';
      printTo(os, e->b);
      os << ',';
      printTo(os, e->pi);
      os << ',';
      printTo(os, e->a);
      os << '>';
      return;
    case Ek::Sum: {
      bool first = true;
      for (const auto& m : e->ms) {
        if (!first) os << '+';
        first = false;
        os << "L^(";
        printTo(os, m.exp);
        os << ")*<";
        printTo(os, m.b);
        os << ',';
        printTo(os, m.pi);
        os << ',';
        printTo(os, m.a);
        os << '>';
      }
      return;
    }
  }
}

inline void printTo(std::ostringstream& os, TPtr t) {
  switch (t->kind) {
    case Tk::Zero:
      os << '0';
      return;
    case Tk::Kappa:
      os << 'K';
      return;
    case Tk::Sum: {
      bool first = true;
      for (auto p : t->parts) {
        if (!first) os << '+';
        first = false;
        printTo(os, p);
      }
      return;
    }
    case Tk::Phi:
      os << "phi(";
      printTo(os, t->x);
      os << ',';
      printTo(os, t->y);
      os << ')';
      return;
    case Tk::WExp:
      os << "w^(";
      printTo(os, t->x);
      os << ')';
      return;
    case Tk::OmIdx:
      os << "Om(";
      printTo(os, t->x);
      os << ')';
      return;
    case Tk::Psi: {
      os << "psi(";
      printTo(os, t->x);
      os << "; ";
      if (!isZeroVec(t->vec)) {
        bool first = true;
        for (auto e : t->vec) {
          if (!first) os << ',';
          first = false;
          printTo(os, e);
        }
        os << "; ";
      }
      printTo(os, t->y);
      os << ')';
      return;
    }
  }
}

}  // namespace detail

inline std::string print(TPtr t) {
  std::ostringstream os;
  detail::printTo(os, t);
  return os.str();
}

inline std::string print(EPtr e) {
  std::ostringstream os;
  detail::printTo(os, e);
  return os.str();
}

}  // namespace otkit
