/*
 * Copyright (c) 2026, The rpi-workbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rpi/parser.hpp"

#include <cctype>
#include <cstdlib>

namespace rpi {

ParseError::ParseError(const std::string& what, std::size_t offset, std::size_t line, std::size_t column)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      offset_(offset),
      line_(line),
      column_(column) {}

namespace {

/// Recursive-descent parser over both grammars; `reversible_` enables the
/// history and memory decorations.
class Parser {
 public:
  Parser(std::string_view text, bool reversible, SemanticsKind kind)
      : text_(text), reversible_(reversible), kind_(kind) {}

  ProcessPtr ParsePlain() {
    ProcessPtr p = PlainPar();
    ExpectEnd();
    return p;
  }

  RPtr ParseReversible() {
    RPtr x = RevPar();
    ExpectEnd();
    return x;
  }

 private:
  // ---- lexing helpers ----

  void SkipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void Fail(const std::string& what) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, pos_, line, column);
  }

  bool Peek(char c) {
    SkipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool Accept(char c) {
    if (!Peek(c)) return false;
    ++pos_;
    return true;
  }

  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("expected '") + c + "'");
  }

  void ExpectEnd() {
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
  }

  static bool IdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool IdentChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  bool PeekIdent() {
    SkipSpace();
    return pos_ < text_.size() && IdentStart(text_[pos_]);
  }

  bool PeekKeyword(std::string_view kw) {
    SkipSpace();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t end = pos_ + kw.size();
    return end == text_.size() || !IdentChar(text_[end]);
  }

  std::string Ident() {
    if (!PeekIdent()) Fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && IdentChar(text_[pos_])) ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    if (id == "new") Fail("'new' is reserved");
    return id;
  }

  bool PeekNumber() {
    SkipSpace();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Key Number() {
    if (!PeekNumber()) Fail("expected key");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return static_cast<Key>(std::strtoul(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10));
  }

  Key PositiveKey() {
    Key k = Number();
    if (k == kStar) Fail("key 0 is reserved");
    return k;
  }

  Key KeyOrStar() {
    if (Accept('*')) return kStar;
    return PositiveKey();
  }

  std::set<Key> KeyList(bool allow_star) {
    std::set<Key> out;
    Expect('{');
    if (Accept('}')) return out;
    do {
      out.insert(allow_star ? KeyOrStar() : PositiveKey());
    } while (Accept(','));
    Expect('}');
    return out;
  }

  // ---- plain grammar ----

  ProcessPtr PlainPar() {
    ProcessPtr left = PlainUnit();
    if (Accept('|')) return Par(left, PlainPar());
    return left;
  }

  ProcessPtr PlainUnit() {
    if (Accept('(')) {
      ProcessPtr p = PlainPar();
      Expect(')');
      return p;
    }
    if (PeekNumber()) {
      if (Number() != 0) Fail("expected '0'");
      return Nil();
    }
    if (PeekKeyword("new")) {
      pos_ += 3;
      std::string name = Ident();
      Expect('.');
      return New(name, PlainPar());
    }
    std::string subject = Ident();
    if (Accept('<')) {
      std::string object = Ident();
      Expect('>');
      return Out(subject, object, Accept('.') ? PlainUnit() : Nil());
    }
    if (Accept('(')) {
      std::string binder = Ident();
      Expect(')');
      return In(subject, binder, Accept('.') ? PlainUnit() : Nil());
    }
    Fail("expected '<' or '('");
  }

  // ---- reversible grammar ----

  Name RevName() {
    Name n{Ident(), kStar};
    if (Accept('^')) n.inst = PositiveKey();
    return n;
  }

  std::optional<Event> RevEvent() {
    if (!Accept('[')) return std::nullopt;
    Event e;
    e.key = PositiveKey();
    Expect(',');
    if (Accept('*')) {
      e.cause = NoCause();
    } else {
      e.cause = KeyList(true);
      if (e.cause.empty()) Fail("cause set cannot be empty");
    }
    Expect(']');
    return e;
  }

  Memory RevMemory() {
    Memory m = Memory::Init(kind_);
    if (!Peek('{')) return m;
    m.gamma = KeyList(false);
    if (kind_ == SemanticsKind::kBs) {
      Expect('_');
      m.w = KeyOrStar();
    } else if (kind_ == SemanticsKind::kCvy) {
      Expect('_');
      if (Accept('*')) {
        m.omega = {kStar};
      } else {
        m.omega = KeyList(true);
      }
    }
    return m;
  }

  RPtr RevPar() {
    RPtr left = RevUnit();
    if (Accept('|')) return RPar(left, RevPar());
    return left;
  }

  RPtr RevUnit() {
    if (Accept('(')) {
      RPtr x = RevPar();
      Expect(')');
      return x;
    }
    if (PeekNumber()) {
      if (Number() != 0) Fail("expected '0'");
      return RNil();
    }
    if (PeekKeyword("new")) {
      pos_ += 3;
      std::string name = Ident();
      Memory m = RevMemory();
      Expect('.');
      return RNew(name, m, RevPar());
    }
    Name subject = RevName();
    if (Accept('<')) {
      Name object = RevName();
      Expect('>');
      auto event = RevEvent();
      return ROut(subject, object, Accept('.') ? RevUnit() : RNil(), event);
    }
    if (Accept('(')) {
      std::string binder = Ident();
      Expect(')');
      auto event = RevEvent();
      return RIn(subject, binder, Accept('.') ? RevUnit() : RNil(), event);
    }
    Fail("expected '<' or '('");
  }

  std::string_view text_;
  bool reversible_;
  SemanticsKind kind_;
  std::size_t pos_ = 0;
};

}  // namespace

ProcessPtr ParseProcess(std::string_view text) { return Parser(text, false, SemanticsKind::kRpi).ParsePlain(); }

RPtr ParseRProcess(std::string_view text, SemanticsKind kind) {
  return Parser(text, true, kind).ParseReversible();
}

}  // namespace rpi
