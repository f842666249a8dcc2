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

#include "rpi/json_codec.hpp"

#include "rpi/parser.hpp"

namespace rpi {

namespace {

const Json& Field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw JsonError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string StringField(const Json& j, const char* name) {
  const Json& v = Field(j, name);
  if (!v.is_string()) throw JsonError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::set<Key> KeysFromJson(const Json& j) {
  if (!j.is_array()) throw JsonError("expected an array of keys");
  std::set<Key> out;
  for (const Json& k : j) out.insert(KeyFromJson(k));
  return out;
}

Json KeysToJson(const std::set<Key>& keys) {
  Json out = Json::array();
  for (Key k : keys) out.push_back(KeyToJson(k));
  return out;
}

Json NameToJson(const Name& n) { return {{"name", n.base}, {"inst", KeyToJson(n.inst)}}; }

Name NameFromJson(const Json& j) {
  Name n{StringField(j, "name"), kStar};
  if (j.contains("inst")) n.inst = KeyFromJson(j.at("inst"));
  return n;
}

Json Tree(const RPtr& x) {
  switch (x->kind) {
    case RProcess::Kind::kNil:
      return {{"type", "nil"}};
    case RProcess::Kind::kOut:
    case RProcess::Kind::kIn: {
      Json j;
      j["type"] = x->kind == RProcess::Kind::kOut ? "out" : "in";
      j["subject"] = NameToJson(x->subject);
      if (x->kind == RProcess::Kind::kOut) {
        j["object"] = NameToJson(x->object);
      } else {
        j["binder"] = x->binder;
      }
      if (x->event) {
        j["key"] = x->event->key;
        j["cause"] = CauseToJson(x->event->cause);
      }
      j["cont"] = Tree(x->left);
      return j;
    }
    case RProcess::Kind::kPar:
      return {{"type", "par"}, {"left", Tree(x->left)}, {"right", Tree(x->right)}};
    case RProcess::Kind::kNew:
      return {{"type", "new"}, {"name", x->name}, {"memory", ToJson(x->memory)}, {"body", Tree(x->left)}};
  }
  return {};
}

RPtr FromTree(const Json& j, SemanticsKind kind) {
  std::string type = StringField(j, "type");
  if (type == "nil") return RNil();
  if (type == "par") return RPar(FromTree(Field(j, "left"), kind), FromTree(Field(j, "right"), kind));
  if (type == "new") {
    Memory m = j.contains("memory") ? MemoryFromJson(j.at("memory")) : Memory::Init(kind);
    return RNew(StringField(j, "name"), m, FromTree(Field(j, "body"), kind));
  }
  if (type == "out" || type == "in") {
    std::optional<Event> event;
    if (j.contains("key")) {
      event = Event{KeyFromJson(j.at("key")), j.contains("cause") ? CauseFromJson(j.at("cause")) : NoCause()};
      if (event->key == kStar) throw JsonError("a past prefix needs a positive key");
    }
    Name subject = NameFromJson(Field(j, "subject"));
    RPtr cont = j.contains("cont") ? FromTree(j.at("cont"), kind) : RNil();
    if (type == "out") return ROut(subject, NameFromJson(Field(j, "object")), cont, event);
    return RIn(subject, StringField(j, "binder"), cont, event);
  }
  throw JsonError("unknown process type '" + type + "'");
}

std::string_view ActionType(Action::Kind k) {
  switch (k) {
    case Action::Kind::kOut: return "out";
    case Action::Kind::kIn: return "in";
    case Action::Kind::kBoundOut: return "bout";
    case Action::Kind::kTau: return "tau";
  }
  return "tau";
}

}  // namespace

Json KeyToJson(Key k) {
  if (k == kStar) return "*";
  return k;
}

Key KeyFromJson(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "*") return kStar;
  if (j.is_number_unsigned()) return j.get<Key>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<Key>(j.get<long long>());
  throw JsonError("a key is a non-negative integer or \"*\"");
}

Json CauseToJson(const CauseSet& k) { return KeysToJson(k); }

CauseSet CauseFromJson(const Json& j) {
  CauseSet k = KeysFromJson(j);
  if (k.empty()) throw JsonError("a cause set is never empty");
  return k;
}

Json ToJson(const Memory& m) {
  Json j{{"kind", std::string(ToString(m.kind))}, {"gamma", KeysToJson(m.gamma)}};
  if (m.kind == SemanticsKind::kBs) j["w"] = KeyToJson(m.w);
  if (m.kind == SemanticsKind::kCvy) j["omega"] = KeysToJson(m.omega);
  return j;
}

Memory MemoryFromJson(const Json& j) {
  auto kind = ParseSemanticsKind(StringField(j, "kind"));
  if (!kind) throw JsonError("unknown memory kind");
  Memory m = Memory::Init(*kind);
  if (j.contains("gamma")) m.gamma = KeysFromJson(j.at("gamma"));
  m.gamma.erase(kStar);
  if (*kind == SemanticsKind::kBs && j.contains("w")) m.w = KeyFromJson(j.at("w"));
  if (*kind == SemanticsKind::kCvy && j.contains("omega")) m.omega = KeysFromJson(j.at("omega"));
  return m;
}

Json ToJson(const ProcessPtr& p) {
  switch (p->kind) {
    case Process::Kind::kNil:
      return {{"type", "nil"}};
    case Process::Kind::kOut:
      return {{"type", "out"}, {"subject", p->subject}, {"object", p->object}, {"cont", ToJson(p->left)}};
    case Process::Kind::kIn:
      return {{"type", "in"}, {"subject", p->subject}, {"binder", p->object}, {"cont", ToJson(p->left)}};
    case Process::Kind::kPar:
      return {{"type", "par"}, {"left", ToJson(p->left)}, {"right", ToJson(p->right)}};
    case Process::Kind::kNew:
      return {{"type", "new"}, {"name", p->object}, {"body", ToJson(p->left)}};
  }
  return {};
}

ProcessPtr ProcessFromJson(const Json& j) {
  std::string type = StringField(j, "type");
  auto cont = [&] { return j.contains("cont") ? ProcessFromJson(j.at("cont")) : Nil(); };
  if (type == "nil") return Nil();
  if (type == "out") return Out(StringField(j, "subject"), StringField(j, "object"), cont());
  if (type == "in") return In(StringField(j, "subject"), StringField(j, "binder"), cont());
  if (type == "par") return Par(ProcessFromJson(Field(j, "left")), ProcessFromJson(Field(j, "right")));
  if (type == "new") return New(StringField(j, "name"), ProcessFromJson(Field(j, "body")));
  throw JsonError("unknown process type '" + type + "'");
}

Json ToJson(const RPtr& x) { return {{"text", ToString(x)}, {"term", Tree(x)}}; }

RPtr RProcessFromJson(const Json& j, SemanticsKind kind) {
  if (j.is_object() && j.contains("term")) return FromTree(j.at("term"), kind);
  if (j.is_object() && j.contains("text")) {
    try {
      return ParseRProcess(StringField(j, "text"), kind);
    } catch (const ParseError& e) {
      throw JsonError(e.what());
    }
  }
  return FromTree(j, kind);
}

Json ToJson(const Action& a) {
  Json j{{"type", std::string(ActionType(a.kind))}};
  if (a.kind == Action::Kind::kTau) return j;
  j["subject"] = a.subject;
  if (a.kind == Action::Kind::kIn) {
    j["binder"] = a.object;
  } else {
    j["object"] = a.object;
  }
  if (a.memory) j["memory"] = ToJson(*a.memory);
  return j;
}

Action ActionFromJson(const Json& j) {
  std::string type = StringField(j, "type");
  if (type == "tau") return Action::Tau();
  if (type == "out") return Action::Out(StringField(j, "subject"), StringField(j, "object"));
  if (type == "in") return Action::In(StringField(j, "subject"), StringField(j, "binder"));
  if (type == "bout") {
    return Action::BoundOut(StringField(j, "subject"), StringField(j, "object"), MemoryFromJson(Field(j, "memory")));
  }
  throw JsonError("unknown action type '" + type + "'");
}

Json ToJson(const Label& l) {
  return {{"key", l.key}, {"cause", CauseToJson(l.cause)}, {"inst", KeyToJson(l.inst)}, {"action", ToJson(l.action)}};
}

Label LabelFromJson(const Json& j) {
  Label l;
  l.key = KeyFromJson(Field(j, "key"));
  l.cause = j.contains("cause") ? CauseFromJson(j.at("cause")) : NoCause();
  l.inst = j.contains("inst") ? KeyFromJson(j.at("inst")) : kStar;
  l.action = ActionFromJson(Field(j, "action"));
  return l;
}

Json ToJson(const Transition& t) {
  Json j = ToJson(t.label);
  j["dir"] = std::string(ToString(t.dir));
  j["text"] = t.label.ToString();
  j["target"] = ToJson(t.target);
  return j;
}

Json CausalityToJson(const Trace& trace) {
  TraceCausality c = AnalyzeTrace(trace);
  Json nodes = Json::array();
  for (std::size_t p = 0; p < trace.size(); ++p) {
    nodes.push_back({{"index", p},
                     {"key", trace[p].label.key},
                     {"dir", std::string(ToString(trace[p].dir))},
                     {"label", trace[p].label.ToString()}});
  }
  Json edges = Json::array();
  for (const auto& e : c.edges) {
    if (e.structural) edges.push_back({{"from", e.from}, {"to", e.to}, {"type", "structural"}});
    if (e.object) edges.push_back({{"from", e.from}, {"to", e.to}, {"type", "object"}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace rpi
