#include <downset/vector.hh>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace downset {
  vector::vector (std::size_t k) : comps (k, 0) {
    if (k == 0)
      throw error ("vectors must have at least one component");
  }

  vector::vector (std::initializer_list<value_type> values) : comps (values) {
    if (comps.empty ())
      throw error ("vectors must have at least one component");
  }

  vector::vector (std::vector<value_type> values) : comps (std::move (values)) {
    if (comps.empty ())
      throw error ("vectors must have at least one component");
  }

  vector::vector (std::span<const value_type> values) : comps (values.begin (), values.end ()) {
    if (comps.empty ())
      throw error ("vectors must have at least one component");
  }

  void check_same_dim (const vector& u, const vector& v) {
    if (u.size () != v.size ())
      throw dimension_mismatch (u.size (), v.size ());
  }

  ordering compare (const vector& u, const vector& v) {
    check_same_dim (u, v);
    bool le = true, ge = true;
    for (std::size_t i = 0; i < u.size (); ++i) {
      le = le && u[i] <= v[i];
      ge = ge && u[i] >= v[i];
    }
    if (le && ge)
      return ordering::equal;
    if (le)
      return ordering::less;
    if (ge)
      return ordering::greater;
    return ordering::incomparable;
  }

  ordering compare_oneway (const vector& u, const vector& v, std::uint64_t& comparisons) {
    check_same_dim (u, v);
    const std::size_t k = u.size ();
    std::size_t i = 0;
    for (; i < k; ++i) {
      ++comparisons;
      if (u[i] != v[i])
        break;
    }
    if (i == k)
      return ordering::equal;

    ++comparisons;
    if (u[i] > v[i]) {
      // u cannot be below v; only u > v remains possible.
      for (std::size_t p = i + 1; p < k; ++p) {
        ++comparisons;
        if (u[p] < v[p])
          return ordering::incomparable;
      }
      return ordering::greater;
    }
    for (std::size_t p = i + 1; p < k; ++p) {
      ++comparisons;
      if (u[p] > v[p])
        return ordering::incomparable;
    }
    return ordering::less;
  }

  bool leq (const vector& u, const vector& v) {
    check_same_dim (u, v);
    for (std::size_t i = 0; i < u.size (); ++i)
      if (u[i] > v[i])
        return false;
    return true;
  }

  bool lt (const vector& u, const vector& v) {
    return leq (u, v) && u != v;
  }

  vector meet (const vector& u, const vector& v) {
    check_same_dim (u, v);
    vector r (u.size ());
    for (std::size_t i = 0; i < u.size (); ++i)
      r[i] = std::min (u[i], v[i]);
    return r;
  }

  std::string to_string (const vector& v) {
    std::ostringstream os;
    os << v;
    return os.str ();
  }

  std::string to_string (ordering o) {
    switch (o) {
      case ordering::less: return "less";
      case ordering::greater: return "greater";
      case ordering::equal: return "equal";
      case ordering::incomparable: return "incomparable";
    }
    return "?";
  }

  std::ostream& operator<< (std::ostream& os, const vector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size (); ++i)
      os << (i ? ", " : "") << v[i];
    return os << ')';
  }
}
