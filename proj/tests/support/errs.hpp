#pragma once

#include <kmsph/errors.hpp>

namespace kmsph::testing {

// True iff fn() throws a kmsph::Error with the wanted code.
template <typename Fn>
bool throws_errc(Fn&& fn, Errc want) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace kmsph::testing
