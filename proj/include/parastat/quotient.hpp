#pragma once

#include <cstdint>
#include <deque>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <unordered_map>
#include <vector>

#include "parastat/presentation.hpp"

namespace parastat {

/// How the truncated ideal I_{<=D} = span{u r v : deg u + deg r + deg v <= D}
/// is put into fully reduced echelon form.
enum class Engine {
    /// Degree-truncated noncommutative completion: overlap ambiguities whose
    /// overlap word has length <= D are resolved. Scales to large D.
    completion,
    /// Sparse Gaussian elimination over every word of length <= D.
    elimination,
};

namespace detail {

inline std::uint64_t word_count_up_to(std::size_t letters, int degree) {
    std::uint64_t total = 0, layer = 1;
    for (int d = 0; d <= degree; ++d) {
        total += layer;
        layer *= letters;
    }
    return total;
}

/// All words of length <= degree in deglex order.
inline std::vector<Word> words_up_to(std::size_t letters, int degree) {
    std::vector<Word> out{Word{}};
    std::size_t layer_begin = 0;
    for (int d = 1; d <= degree; ++d) {
        const std::size_t layer_end = out.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i)
            for (std::size_t a = 0; a < letters; ++a)
                out.push_back(out[i] + Word::letter(static_cast<int>(a)));
        layer_begin = layer_end;
    }
    return out;
}

struct Divisor {
    std::size_t position;
    int index;
};

class Completion {
public:
    Completion(const Presentation& p, int degree) : degree_(degree) {
        std::deque<Element> pending;
        for (const auto& r : p.relations())
            if (!r.is_zero() && r.degree() <= degree_)
                pending.push_back(r);
        std::stable_sort(pending.begin(), pending.end(), [](const Element& a, const Element& b) {
            return DeglexLess{}(a.leading().word, b.leading().word);
        });

        for (;;) {
            while (!pending.empty()) {
                Element h = reduce(pending.front());
                pending.pop_front();
                if (!h.is_zero())
                    add(monic(h), pending);
            }
            if (pairs_.empty())
                break;
            Overlap o = pairs_.top();
            pairs_.pop();
            if (!alive_[o.left] || !alive_[o.right])
                continue;
            pending.push_back(s_polynomial(o));
        }
        interreduce_tails();
    }

    /// Leftmost occurrence of a leading word inside w.
    std::optional<Divisor> find_divisor(const Word& w) const {
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            for (const auto& [len, count] : lead_lengths_) {
                if (pos + static_cast<std::size_t>(len) > w.size())
                    break;
                auto it = by_lead_.find(w.sub(pos, static_cast<std::size_t>(len)));
                if (it != by_lead_.end())
                    return Divisor{pos, it->second};
            }
        return std::nullopt;
    }

    /// True when no leading word is a suffix of w (prefix already standard).
    bool suffix_standard(const Word& w) const {
        for (const auto& [len, count] : lead_lengths_) {
            if (static_cast<std::size_t>(len) > w.size())
                break;
            if (by_lead_.count(w.sub(w.size() - static_cast<std::size_t>(len))))
                return false;
        }
        return true;
    }

    const Element& poly(int index) const { return polys_[static_cast<std::size_t>(index)]; }

    /// Reduced basis sorted by leading word.
    std::vector<Element> basis() const {
        std::vector<Element> out;
        for (std::size_t i = 0; i < polys_.size(); ++i)
            if (alive_[i])
                out.push_back(polys_[i]);
        std::sort(out.begin(), out.end(), [](const Element& a, const Element& b) {
            return DeglexLess{}(a.leading().word, b.leading().word);
        });
        return out;
    }

    Element reduce(const Element& f) const {
        std::map<Word, Scalar, DeglexLess> work;
        for (const auto& t : f.terms())
            work.emplace(t.word, t.coeff);
        std::vector<Term> kept;
        while (!work.empty()) {
            auto it = std::prev(work.end());
            Word w = it->first;
            Scalar c = std::move(it->second);
            work.erase(it);
            auto d = find_divisor(w);
            if (!d) {
                kept.push_back({std::move(w), std::move(c)});
                continue;
            }
            const Element& g = poly(d->index);
            const std::size_t lead_len = g.leading().word.size();
            const Word left = w.sub(0, d->position);
            const Word right = w.sub(d->position + lead_len);
            for (std::size_t i = 0; i + 1 < g.terms().size(); ++i) {
                const Term& t = g.terms()[i];
                Word key = left + t.word + right;
                auto [slot, fresh] = work.try_emplace(std::move(key), 0);
                slot->second -= c * t.coeff;
                if (is_zero(slot->second))
                    work.erase(slot);
            }
        }
        std::reverse(kept.begin(), kept.end());
        return Element::from_sorted(f.alphabet(), std::move(kept));
    }

private:
    struct Overlap {
        Word word;
        int left;
        int right;
        std::size_t shared;
    };
    struct OverlapAfter {
        bool operator()(const Overlap& a, const Overlap& b) const {
            DeglexLess less;
            if (less(b.word, a.word))
                return true;
            if (less(a.word, b.word))
                return false;
            return std::tie(a.left, a.right, a.shared) > std::tie(b.left, b.right, b.shared);
        }
    };

    static Element monic(const Element& h) {
        const Scalar inv = 1 / h.leading().coeff;
        return inv * h;
    }

    void add(Element h, std::deque<Element>& pending) {
        const Word lead = h.leading().word;
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            if (!alive_[i] || !contains_factor(polys_[i].leading().word, lead))
                continue;
            retire(static_cast<int>(i));
            pending.push_back(polys_[i]);
        }
        const int index = static_cast<int>(polys_.size());
        polys_.push_back(std::move(h));
        alive_.push_back(true);
        by_lead_[lead] = index;
        ++lead_lengths_[lead.degree()];

        for (std::size_t i = 0; i < polys_.size(); ++i) {
            if (!alive_[i])
                continue;
            queue_overlaps(index, static_cast<int>(i));
            if (static_cast<int>(i) != index)
                queue_overlaps(static_cast<int>(i), index);
        }
    }

    void retire(int index) {
        alive_[static_cast<std::size_t>(index)] = false;
        const Word& lead = poly(index).leading().word;
        by_lead_.erase(lead);
        if (--lead_lengths_[lead.degree()] == 0)
            lead_lengths_.erase(lead.degree());
    }

    // Suffix of lead(a) equal to prefix of lead(b), proper on both sides.
    void queue_overlaps(int a, int b) {
        const Word& la = poly(a).leading().word;
        const Word& lb = poly(b).leading().word;
        const std::size_t limit = std::min(la.size(), lb.size());
        for (std::size_t k = 1; k < limit; ++k) {
            if (static_cast<int>(la.size() + lb.size() - k) > degree_)
                continue;
            if (la.letters().compare(la.size() - k, k, lb.letters(), 0, k) != 0)
                continue;
            pairs_.push({la + lb.sub(k), a, b, k});
        }
    }

    Element s_polynomial(const Overlap& o) const {
        const Element& a = poly(o.left);
        const Element& b = poly(o.right);
        const Word& la = a.leading().word;
        const Word& lb = b.leading().word;
        const auto alphabet = a.alphabet();
        return a * Element::word(alphabet, lb.sub(o.shared)) -
               Element::word(alphabet, la.sub(0, la.size() - o.shared)) * b;
    }

    void interreduce_tails() {
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            if (!alive_[i])
                continue;
            const Element& g = polys_[i];
            const Term lead = g.leading();
            std::vector<Term> tail(g.terms().begin(), g.terms().end() - 1);
            Element reduced = reduce(Element::from_sorted(g.alphabet(), std::move(tail)));
            polys_[i] = reduced + Element::word(g.alphabet(), lead.word, lead.coeff);
        }
    }

    int degree_;
    std::vector<Element> polys_;
    std::vector<bool> alive_;
    std::unordered_map<Word, int, WordHash> by_lead_;
    std::map<int, int> lead_lengths_;
    std::priority_queue<Overlap, std::vector<Overlap>, OverlapAfter> pairs_;
};

// Sparse row: (column, coefficient) with columns strictly decreasing.
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

inline SparseRow axpy_row(const SparseRow& x, const Scalar& c, const SparseRow& y) {
    // x - c*y
    SparseRow out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first > j->first)) {
            out.push_back(*i++);
        } else if (i == x.end() || j->first > i->first) {
            out.emplace_back(j->first, -c * j->second);
            ++j;
        } else {
            Scalar v = i->second - c * j->second;
            if (!is_zero(v))
                out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

class Elimination {
public:
    static constexpr std::uint64_t max_columns = 200000;

    Elimination(const Presentation& p, int degree) {
        const std::size_t letters = p.alphabet()->size();
        if (word_count_up_to(letters, degree) > max_columns)
            throw InvalidArgument("elimination engine limited to " + std::to_string(max_columns) + " words");
        words_ = words_up_to(letters, degree);
        for (std::size_t i = 0; i < words_.size(); ++i)
            column_.emplace(words_[i], static_cast<std::uint32_t>(i));

        for (const auto& r : p.relations()) {
            if (r.is_zero() || r.degree() > degree)
                continue;
            const int room = degree - r.degree();
            for (const auto& u : words_) {
                if (u.degree() > room)
                    break;
                for (const auto& v : words_) {
                    if (u.degree() + v.degree() > room)
                        break;
                    insert(embed(r, u, v));
                }
            }
        }
        back_substitute();
    }

    const std::vector<Word>& words() const { return words_; }
    const std::map<std::uint32_t, SparseRow>& rows() const { return rows_; }
    std::optional<std::uint32_t> column(const Word& w) const {
        auto it = column_.find(w);
        if (it == column_.end())
            return std::nullopt;
        return it->second;
    }

private:
    SparseRow embed(const Element& r, const Word& u, const Word& v) const {
        SparseRow row;
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it)
            row.emplace_back(column_.at(u + it->word + v), it->coeff);
        // deglex is monomial, so u*w*v preserves the term order
        return row;
    }

    void insert(SparseRow row) {
        while (!row.empty()) {
            auto it = rows_.find(row.front().first);
            if (it == rows_.end())
                break;
            const Scalar c = row.front().second;
            row = axpy_row(row, c, it->second);
        }
        if (row.empty())
            return;
        const Scalar inv = 1 / row.front().second;
        for (auto& [col, c] : row)
            c *= inv;
        rows_.emplace(row.front().first, std::move(row));
    }

    // Rows are processed by increasing pivot, so every row used for
    // reduction is already fully reduced.
    void back_substitute() {
        for (auto& [pivot, row] : rows_) {
            std::map<std::uint32_t, Scalar, std::greater<>> work;
            for (std::size_t i = 1; i < row.size(); ++i)
                work.emplace(row[i].first, row[i].second);
            SparseRow out{row.front()};
            while (!work.empty()) {
                auto it = work.begin();
                const std::uint32_t col = it->first;
                const Scalar c = it->second;
                work.erase(it);
                auto r = rows_.find(col);
                if (r == rows_.end()) {
                    out.emplace_back(col, c);
                    continue;
                }
                for (std::size_t i = 1; i < r->second.size(); ++i) {
                    Scalar& slot = work[r->second[i].first];
                    slot -= c * r->second[i].second;
                    if (is_zero(slot))
                        work.erase(r->second[i].first);
                }
            }
            row = std::move(out);
        }
    }

    std::vector<Word> words_;
    std::unordered_map<Word, std::uint32_t, WordHash> column_;
    std::map<std::uint32_t, SparseRow> rows_;
};

} // namespace detail

/// Fully reduced echelon description of the truncated ideal I_{<=D}, with
/// memoized normal forms. Immutable apart from the internal memo, which is
/// guarded for concurrent normal_form calls.
class IdealBasis {
public:
    IdealBasis(PresentationPtr p, int degree, Engine engine = Engine::completion)
        : presentation_(std::move(p)), degree_(degree), engine_(engine) {
        if (degree_ < 0)
            throw InvalidArgument("truncation degree must be nonnegative");
        if (engine_ == Engine::completion)
            completion_.emplace(*presentation_, degree_);
        else
            elimination_.emplace(*presentation_, degree_);
    }

    const Presentation& presentation() const { return *presentation_; }
    const PresentationPtr& presentation_ptr() const { return presentation_; }
    const AlphabetPtr& alphabet() const { return presentation_->alphabet(); }
    int degree() const { return degree_; }
    Engine engine() const { return engine_; }

    bool is_standard(const Word& w) const {
        if (w.degree() > degree_)
            throw TruncationError(w.degree(), degree_);
        if (completion_)
            return !completion_->find_divisor(w);
        return !elimination_->rows().count(*elimination_->column(w));
    }

    Element normal_form(const Word& w) const {
        std::lock_guard lock(memo_mutex_);
        return Element::from_sorted(alphabet(), word_normal_form(w));
    }

    Element normal_form(const Element& x) const {
        if (!same_alphabet(x.alphabet(), alphabet()))
            throw AlphabetMismatch();
        if (x.degree() > degree_)
            throw TruncationError(x.degree(), degree_);
        std::map<Word, Scalar, DeglexLess> acc;
        {
            std::lock_guard lock(memo_mutex_);
            for (const auto& t : x.terms())
                for (const auto& s : word_normal_form(t.word))
                    acc[s.word] += t.coeff * s.coeff;
        }
        return Element::from_map(alphabet(), acc);
    }

    /// Number of words of length <= D outside the standard set.
    std::uint64_t rank() const { return total_words() - standard_word_count(); }

    std::uint64_t total_words() const { return detail::word_count_up_to(alphabet()->size(), degree_); }

    /// Dimension of the degree-<=D filtration piece of the quotient.
    std::uint64_t standard_word_count() const {
        if (elimination_)
            return elimination_->words().size() - elimination_->rows().size();
        // standard words are closed under taking prefixes
        std::uint64_t count = 0;
        std::vector<Word> layer{Word{}};
        for (int d = 0; d <= degree_; ++d) {
            count += layer.size();
            if (d == degree_)
                break;
            std::vector<Word> next;
            for (const auto& w : layer)
                for (std::size_t a = 0; a < alphabet()->size(); ++a) {
                    Word x = w + Word::letter(static_cast<int>(a));
                    if (completion_->suffix_standard(x))
                        next.push_back(std::move(x));
                }
            layer = std::move(next);
        }
        return count;
    }

    /// Fully reduced echelon rows w - NF(w), sorted by leading word w.
    std::vector<Element> rows() const {
        std::vector<Element> out;
        if (elimination_) {
            const auto& words = elimination_->words();
            for (const auto& [pivot, row] : elimination_->rows()) {
                std::vector<Term> terms;
                for (auto it = row.rbegin(); it != row.rend(); ++it)
                    terms.push_back({words[it->first], it->second});
                out.push_back(Element::from_sorted(alphabet(), std::move(terms)));
            }
            return out;
        }
        for (const auto& w : detail::words_up_to(alphabet()->size(), degree_))
            if (!is_standard(w))
                out.push_back(Element::word(alphabet(), w) - normal_form(w));
        return out;
    }

    /// Reduced completion basis; empty for the elimination engine.
    std::vector<Element> completion_basis() const {
        return completion_ ? completion_->basis() : std::vector<Element>{};
    }

private:
    // Caller holds memo_mutex_. unordered_map keeps references stable
    // across the recursive inserts.
    const std::vector<Term>& word_normal_form(const Word& w) const {
        if (auto it = memo_.find(w); it != memo_.end())
            return it->second;
        if (w.degree() > degree_)
            throw TruncationError(w.degree(), degree_);
        std::vector<Term> result;
        if (completion_) {
            auto d = completion_->find_divisor(w);
            if (!d) {
                result.push_back({w, Scalar(1)});
            } else {
                const Element& g = completion_->poly(d->index);
                const Word left = w.sub(0, d->position);
                const Word right = w.sub(d->position + g.leading().word.size());
                std::map<Word, Scalar, DeglexLess> acc;
                for (std::size_t i = 0; i + 1 < g.terms().size(); ++i) {
                    const Term& t = g.terms()[i];
                    for (const auto& s : word_normal_form(left + t.word + right))
                        acc[s.word] -= t.coeff * s.coeff;
                }
                for (auto& [word, c] : acc)
                    if (!is_zero(c))
                        result.push_back({word, c});
            }
        } else {
            const auto col = *elimination_->column(w);
            auto it = elimination_->rows().find(col);
            if (it == elimination_->rows().end()) {
                result.push_back({w, Scalar(1)});
            } else {
                const auto& words = elimination_->words();
                for (auto e = it->second.rbegin(); e + 1 != it->second.rend(); ++e)
                    result.push_back({words[e->first], -e->second});
            }
        }
        return memo_.emplace(w, std::move(result)).first->second;
    }

    PresentationPtr presentation_;
    int degree_;
    Engine engine_;
    std::optional<detail::Completion> completion_;
    std::optional<detail::Elimination> elimination_;
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<Word, std::vector<Term>, WordHash> memo_;
};

using IdealBasisPtr = std::shared_ptr<const IdealBasis>;

/// Memo of built bases keyed by presentation name, fingerprint, degree and
/// engine. Concurrent requests for one key share a single build.
class IdealBasisCache {
public:
    IdealBasisPtr get(const PresentationPtr& p, int degree, Engine engine = Engine::completion) {
        const std::string key = p->name() + '\n' + p->fingerprint() + '\n' + std::to_string(degree) + '\n' +
                                (engine == Engine::completion ? "c" : "e");
        std::promise<IdealBasisPtr> promise;
        std::shared_future<IdealBasisPtr> future;
        bool builder = false;
        {
            std::lock_guard lock(mutex_);
            auto it = entries_.find(key);
            if (it == entries_.end()) {
                future = promise.get_future().share();
                entries_.emplace(key, future);
                builder = true;
            } else {
                future = it->second;
            }
        }
        if (builder) {
            try {
                promise.set_value(std::make_shared<const IdealBasis>(p, degree, engine));
            } catch (...) {
                {
                    std::lock_guard lock(mutex_);
                    entries_.erase(key);
                }
                promise.set_exception(std::current_exception());
            }
        }
        return future.get();
    }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return entries_.size();
    }

    static IdealBasisCache& shared() {
        static IdealBasisCache cache;
        return cache;
    }

private:
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_future<IdealBasisPtr>> entries_;
};

inline IdealBasisPtr build_ideal_basis(const PresentationPtr& p, int degree, Engine engine = Engine::completion) {
    return IdealBasisCache::shared().get(p, degree, engine);
}

/// Working view of T(V)/I at truncation degree D.
class Quotient {
public:
    Quotient(PresentationPtr p, int degree, Engine engine = Engine::completion)
        : basis_(build_ideal_basis(p, degree, engine)) {}
    explicit Quotient(IdealBasisPtr basis) : basis_(std::move(basis)) {}

    const Presentation& presentation() const { return basis_->presentation(); }
    const PresentationPtr& presentation_ptr() const { return basis_->presentation_ptr(); }
    const AlphabetPtr& alphabet() const { return basis_->alphabet(); }
    int degree() const { return basis_->degree(); }
    Engine engine() const { return basis_->engine(); }
    const IdealBasis& basis() const { return *basis_; }

    Element unit() const { return Element::unit(alphabet()); }
    Element gen(std::string_view token) const { return presentation().generator(token); }

    Element normal_form(const Element& x) const { return basis_->normal_form(x); }
    bool equal(const Element& x, const Element& y) const { return normal_form(x - y).is_zero(); }

    /// Slotwise normal form expanded multilinearly.
    TensorElement tensor_normal_form(const TensorElement& t) const {
        if (!same_alphabet(t.alphabet(), alphabet()))
            throw AlphabetMismatch();
        if (t.slot_degree() > degree())
            throw TruncationError(t.slot_degree(), degree());
        TensorAccumulator acc;
        std::vector<Element> slots;
        for (const auto& term : t.terms()) {
            slots.clear();
            for (const auto& w : term.slots)
                slots.push_back(basis_->normal_form(w));
            accumulate(slots, 0, WordTuple(slots.size()), term.coeff, acc);
        }
        return TensorElement::from_map(alphabet(), t.rank(), acc);
    }

    std::uint64_t dimension() const { return basis_->standard_word_count(); }

private:
    static void accumulate(const std::vector<Element>& slots, std::size_t k, WordTuple tuple, const Scalar& c,
                           TensorAccumulator& acc) {
        if (k == slots.size()) {
            acc[tuple] += c;
            return;
        }
        for (const auto& t : slots[k].terms()) {
            tuple[k] = t.word;
            accumulate(slots, k + 1, tuple, c * t.coeff, acc);
        }
    }

    IdealBasisPtr basis_;
};

inline Element normal_form(const Element& x, const PresentationPtr& p, int degree) {
    return build_ideal_basis(p, degree)->normal_form(x);
}

inline bool equal_mod_ideal(const Element& x, const Element& y, const PresentationPtr& p, int degree) {
    return normal_form(x - y, p, degree).is_zero();
}

inline std::uint64_t filtration_dimension(const PresentationPtr& p, int degree) {
    return build_ideal_basis(p, degree)->standard_word_count();
}

inline TensorElement tensor_normal_form(const TensorElement& t, const PresentationPtr& p, int degree) {
    return Quotient(p, degree).tensor_normal_form(t);
}

} // namespace parastat
