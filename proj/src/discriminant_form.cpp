#include "cubick3/discriminant_form.hpp"

#include <numeric>
#include <set>
#include <vector>

#include "cubick3/error.hpp"

namespace cubick3 {

namespace {

using Element = std::vector<long>;

struct FiniteForm {
    std::vector<long> orders;
    std::vector<std::vector<mpq_class>> b;
    std::optional<std::vector<mpq_class>> q;

    explicit FiniteForm(DiscGroup const & g)
        : b(g.b_values)
        , q(g.q_values)
    {
        for (auto const & d : g.invariant_factors)
            orders.push_back(d.get_si());
    }

    long size() const
    {
        long n = 1;
        for (long o : orders)
            n *= o;
        return n;
    }

    std::vector<Element> elements() const
    {
        std::vector<Element> all{Element(orders.size(), 0)};
        for (std::size_t i = 0; i < orders.size(); ++i) {
            std::vector<Element> next;
            for (auto const & e : all)
                for (long c = 0; c < orders[i]; ++c) {
                    Element x = e;
                    x[i] = c;
                    next.push_back(std::move(x));
                }
            all = std::move(next);
        }
        return all;
    }

    long order_of(Element const & x) const
    {
        long o = 1;
        for (std::size_t i = 0; i < x.size(); ++i)
            o = std::lcm(o, orders[i] / std::gcd(x[i], orders[i]));
        return o;
    }

    mpq_class bilinear(Element const & x, Element const & y) const
    {
        mpq_class s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                if (x[i] && y[j])
                    s += mpq_class(x[i] * y[j]) * b[i][j];
        return reduce_mod(s, 1);
    }

    mpq_class quadratic(Element const & x) const
    {
        mpq_class s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!x[i])
                continue;
            s += mpq_class(x[i] * x[i]) * (*q)[i];
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (x[j])
                    s += 2 * mpq_class(x[i] * x[j]) * b[i][j];
        }
        return reduce_mod(s, 2);
    }
};

class IsoSearch
{
    FiniteForm const & src_;
    FiniteForm const & dst_;
    bool quadratic_;
    std::vector<Element> dst_elements_;
    std::vector<Element> images_;

    // the images generate dst: count the distinct combinations
    bool surjective() const
    {
        std::set<Element> reached;
        FiniteForm const & d = dst_;
        std::vector<long> c(images_.size(), 0);
        for (;;) {
            Element x(d.orders.size(), 0);
            for (std::size_t i = 0; i < images_.size(); ++i)
                for (std::size_t j = 0; j < x.size(); ++j)
                    x[j] = (x[j] + c[i] * images_[i][j]) % d.orders[j];
            reached.insert(std::move(x));
            std::size_t k = 0;
            while (k < c.size() && ++c[k] == src_.orders[k])
                c[k++] = 0;
            if (k == c.size())
                break;
        }
        return static_cast<long>(reached.size()) == d.size();
    }

    bool extend(std::size_t i)
    {
        if (i == src_.orders.size())
            return surjective();
        Element a(src_.orders.size(), 0);
        a[i] = 1;
        for (auto const & x : dst_elements_) {
            if (dst_.order_of(x) != src_.orders[i])
                continue;
            if (quadratic_ && dst_.quadratic(x) != (*src_.q)[i])
                continue;
            if (dst_.bilinear(x, x) != src_.b[i][i])
                continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = dst_.bilinear(x, images_[j]) == src_.b[i][j];
            if (!ok)
                continue;
            images_.push_back(x);
            if (extend(i + 1))
                return true;
            images_.pop_back();
        }
        return false;
    }

  public:
    IsoSearch(FiniteForm const & src, FiniteForm const & dst)
        : src_(src)
        , dst_(dst)
        , quadratic_(src.q.has_value() && dst.q.has_value())
        , dst_elements_(dst.elements())
    {
    }

    bool run() { return extend(0); }
};

} // namespace

bool isomorphic_discriminant_forms(DiscGroup const & a, DiscGroup const & b, long cap)
{
    if (a.order() > cap || b.order() > cap)
        throw LatticeError(ErrorKind::SearchCapExceeded,
                           "discriminant group order exceeds search cap " + std::to_string(cap));
    if (a.order() != b.order() || a.q_values.has_value() != b.q_values.has_value())
        return false;
    FiniteForm const fa(a), fb(b);
    if (fa.orders.empty())
        return true;
    return IsoSearch(fa, fb).run();
}

} // namespace cubick3
