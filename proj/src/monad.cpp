#include "kzlab/monad/monad.hpp"

#include <map>
#include <stdexcept>

namespace kzlab {

namespace {

class IdentityMonad final : public PosetMonad {
 public:
  std::string name() const override { return "identity"; }
  PosetPtr obj(PosetPtr a) const override { return a; }
  Mono map(const Mono& f) const override { return f; }
  Mono unit(PosetPtr a) const override { return Mono::identity(a); }
  PosetPtr sq(PosetPtr a) const override { return a; }
  PosetPtr cube(PosetPtr a) const override { return a; }
  Mono mult(PosetPtr a) const override { return Mono::identity(a); }
  Mono unit_outer(PosetPtr a) const override { return Mono::identity(a); }
  Mono unit_inner(PosetPtr a) const override { return Mono::identity(a); }
  Mono mult_outer(PosetPtr a) const override { return Mono::identity(a); }
  Mono mult_inner(PosetPtr a) const override { return Mono::identity(a); }
  Mono map_under(const Mono& f, PosetPtr) const override { return f; }
  Mono map_sq(const Mono& f) const override { return f; }
  std::vector<int> letters(PosetPtr, int t_elem) const override { return {t_elem}; }
  std::optional<int> word_index(PosetPtr, const std::vector<int>& w) const override {
    if (w.size() != 1) return std::nullopt;
    return w[0];
  }
  std::vector<int> sq_letters(PosetPtr, int sq_elem) const override { return {sq_elem}; }
};

using Word = std::vector<int>;

std::string word_name(const Poset& base, const Word& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += base.names[w[i]];
  }
  return s + "]";
}

// Words over an arbitrary index poset, ordered pointwise within each
// length, enumerated in deterministic (length, lex) order.
struct WordEnc {
  PosetPtr base;
  PosetPtr poset;
  std::vector<Word> decode;
  std::map<Word, int> code;
};

std::shared_ptr<WordEnc> build_words(PosetPtr base, int cap,
                                     const std::function<bool(const Word&)>& keep,
                                     const std::function<std::string(const Word&)>& label) {
  auto e = std::make_shared<WordEnc>();
  e->base = base;
  Word cur;
  std::function<void(int)> gen = [&](int len) {
    if (static_cast<int>(cur.size()) == len) {
      if (keep(cur)) {
        e->code[cur] = static_cast<int>(e->decode.size());
        e->decode.push_back(cur);
      }
      return;
    }
    for (int v = 0; v < base->size(); ++v) {
      cur.push_back(v);
      gen(len);
      cur.pop_back();
    }
  };
  for (int len = 0; len <= cap; ++len) gen(len);

  auto p = std::make_shared<Poset>();
  const int n = static_cast<int>(e->decode.size());
  p->names.reserve(n);
  for (const Word& w : e->decode) p->names.push_back(label(w));
  p->below.assign(n, Mask(n));
  for (int j = 0; j < n; ++j) {
    const Word& wj = e->decode[j];
    for (int i = 0; i < n; ++i) {
      const Word& wi = e->decode[i];
      if (wi.size() != wj.size()) continue;
      bool le = true;
      for (size_t k = 0; k < wi.size() && le; ++k)
        if (!base->leq(wi[k], wj[k])) le = false;
      if (le) p->below[j].set(i);
    }
  }
  e->poset = p;
  return e;
}

class WordMonad final : public PosetMonad {
 public:
  WordMonad(int cap, bool reversed) : cap_(cap), reversed_(reversed) {
    if (cap < 1) throw std::invalid_argument("word monad needs a positive length cap");
  }

  std::string name() const override { return reversed_ ? "list-reversed" : "list"; }

  PosetPtr obj(PosetPtr a) const override { return t(a)->poset; }

  Mono map(const Mono& f) const override {
    auto ea = t(f.src), eb = t(f.dst);
    Mono r{ea->poset, eb->poset, {}};
    r.at.reserve(ea->decode.size());
    for (const Word& w : ea->decode) {
      Word img(w.size());
      for (size_t k = 0; k < w.size(); ++k) img[k] = f.at[w[k]];
      r.at.push_back(eb->code.at(img));
    }
    return r;
  }

  Mono unit(PosetPtr a) const override {
    auto ea = t(a);
    Mono r{a, ea->poset, {}};
    r.at.reserve(a->size());
    for (int v = 0; v < a->size(); ++v) r.at.push_back(ea->code.at(Word{v}));
    return r;
  }

  PosetPtr sq(PosetPtr a) const override { return t2(a)->poset; }
  PosetPtr cube(PosetPtr a) const override { return t3(a)->poset; }

  Mono mult(PosetPtr a) const override {
    auto ea = t(a);
    auto e2 = t2(a);
    Mono r{e2->poset, ea->poset, {}};
    for (const Word& outer : e2->decode) {
      Word flat;
      if (reversed_) {
        for (auto it = outer.rbegin(); it != outer.rend(); ++it)
          for (int v : ea->decode[*it]) flat.push_back(v);
      } else {
        for (int wi : outer)
          for (int v : ea->decode[wi]) flat.push_back(v);
      }
      r.at.push_back(ea->code.at(flat));
    }
    return r;
  }

  Mono unit_outer(PosetPtr a) const override {
    auto ea = t(a);
    auto e2 = t2(a);
    Mono r{ea->poset, e2->poset, {}};
    for (int w = 0; w < static_cast<int>(ea->decode.size()); ++w)
      r.at.push_back(e2->code.at(Word{w}));
    return r;
  }

  Mono unit_inner(PosetPtr a) const override {
    auto ea = t(a);
    auto e2 = t2(a);
    Mono r{ea->poset, e2->poset, {}};
    for (const Word& w : ea->decode) {
      Word outer;
      for (int v : w) outer.push_back(ea->code.at(Word{v}));
      r.at.push_back(e2->code.at(outer));
    }
    return r;
  }

  Mono mult_outer(PosetPtr a) const override {
    auto e2 = t2(a);
    auto e3 = t3(a);
    Mono r{e3->poset, e2->poset, {}};
    for (const Word& w : e3->decode) {
      Word cat;
      if (reversed_) {
        for (auto it = w.rbegin(); it != w.rend(); ++it)
          for (int x : e2->decode[*it]) cat.push_back(x);
      } else {
        for (int vi : w)
          for (int x : e2->decode[vi]) cat.push_back(x);
      }
      r.at.push_back(e2->code.at(cat));
    }
    return r;
  }

  Mono mult_inner(PosetPtr a) const override {
    auto e2 = t2(a);
    auto e3 = t3(a);
    Mono m = mult(a);
    Mono r{e3->poset, e2->poset, {}};
    for (const Word& w : e3->decode) {
      Word outer;
      for (int vi : w) outer.push_back(m.at[vi]);
      r.at.push_back(e2->code.at(outer));
    }
    return r;
  }

  Mono map_under(const Mono& f, PosetPtr a) const override {
    auto e2 = t2(a);
    auto eb = t(f.dst);
    Mono r{e2->poset, eb->poset, {}};
    for (const Word& outer : e2->decode) {
      Word img;
      for (int wi : outer) img.push_back(f.at[wi]);
      r.at.push_back(eb->code.at(img));
    }
    return r;
  }

  Mono map_sq(const Mono& f) const override {
    auto e2a = t2(f.src), e2b = t2(f.dst);
    auto ea = t(f.src), eb = t(f.dst);
    Mono tf = map(f);
    (void)ea;
    Mono r{e2a->poset, e2b->poset, {}};
    for (const Word& outer : e2a->decode) {
      Word img;
      for (int wi : outer) img.push_back(tf.at[wi]);
      r.at.push_back(e2b->code.at(img));
    }
    return r;
  }

  std::vector<int> letters(PosetPtr a, int t_elem) const override {
    return t(a)->decode[t_elem];
  }

  std::optional<int> word_index(PosetPtr a, const std::vector<int>& w) const override {
    auto ea = t(a);
    auto it = ea->code.find(w);
    if (it == ea->code.end()) return std::nullopt;
    return it->second;
  }

  std::vector<int> sq_letters(PosetPtr a, int sq_elem) const override {
    return t2(a)->decode[sq_elem];
  }

  int flat_len(const WordEnc& ea, const Word& outer) const {
    int s = 0;
    for (int wi : outer) s += static_cast<int>(ea.decode[wi].size());
    return s;
  }

  std::shared_ptr<WordEnc> t(PosetPtr a) const {
    auto it = t_.find(a.get());
    if (it != t_.end()) return it->second;
    auto e = build_words(
        a, cap_, [](const Word&) { return true; },
        [&a](const Word& w) { return word_name(*a, w); });
    t_[a.get()] = e;
    return e;
  }

  std::shared_ptr<WordEnc> t2(PosetPtr a) const {
    auto it = t2_.find(a.get());
    if (it != t2_.end()) return it->second;
    auto ea = t(a);
    auto e = build_words(
        ea->poset, cap_,
        [this, ea](const Word& w) { return flat_len(*ea, w) <= cap_; },
        [ea](const Word& w) { return word_name(*ea->poset, w); });
    t2_[a.get()] = e;
    return e;
  }

  std::shared_ptr<WordEnc> t3(PosetPtr a) const {
    auto it = t3_.find(a.get());
    if (it != t3_.end()) return it->second;
    auto ea = t(a);
    auto e2 = t2(a);
    auto keep = [this, ea, e2](const Word& w) {
      int outer_total = 0, flat_total = 0;
      for (int vi : w) {
        outer_total += static_cast<int>(e2->decode[vi].size());
        flat_total += flat_len(*ea, e2->decode[vi]);
      }
      return outer_total <= cap_ && flat_total <= cap_;
    };
    auto e = build_words(e2->poset, cap_, keep,
                         [e2](const Word& w) { return word_name(*e2->poset, w); });
    t3_[a.get()] = e;
    return e;
  }

 private:
  int cap_;
  bool reversed_;
  mutable std::map<const Poset*, std::shared_ptr<WordEnc>> t_, t2_, t3_;
};

}  // namespace

MonadPtr identity_monad() { return std::make_shared<IdentityMonad>(); }

MonadPtr word_monad(int length_cap) {
  return std::make_shared<WordMonad>(length_cap, false);
}

MonadPtr word_monad_reversed(int length_cap) {
  return std::make_shared<WordMonad>(length_cap, true);
}

MonadPtr monad_by_name(const std::string& name, int length_cap) {
  if (name == "identity") return identity_monad();
  if (name == "list") return word_monad(length_cap);
  return nullptr;
}

MonadLawReport check_monad_laws(const PosetMonad& t, PosetPtr a,
                                const std::vector<Mono>& probes) {
  MonadLawReport r;
  auto ta = t.obj(a);
  Mono m = t.mult(a);
  r.left_unit = same_map(Mono::compose(m, t.unit_outer(a)), Mono::identity(ta));
  r.right_unit = same_map(Mono::compose(m, t.unit_inner(a)), Mono::identity(ta));
  r.assoc = same_map(Mono::compose(m, t.mult_outer(a)), Mono::compose(m, t.mult_inner(a)));
  Mono u = t.unit(a);
  r.unit_consequence =
      same_map(Mono::compose(m, Mono::compose(t.unit_outer(a), u)), u) &&
      same_map(Mono::compose(m, Mono::compose(t.unit_inner(a), u)), u);
  r.mult_natural = true;
  r.unit_natural = true;
  for (const Mono& f : probes) {
    if (!same_map(Mono::compose(t.unit(f.dst), f), Mono::compose(t.map(f), u)))
      r.unit_natural = false;
    if (!same_map(Mono::compose(t.mult(f.dst), t.map_sq(f)),
                  Mono::compose(t.map(f), m)))
      r.mult_natural = false;
  }
  return r;
}

}  // namespace kzlab
