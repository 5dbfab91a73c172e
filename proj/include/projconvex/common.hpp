#ifndef PROJCONVEX_COMMON_HPP
#define PROJCONVEX_COMMON_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace projconvex {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// projcore
struct ZeroVector : Error { using Error::Error; };
struct NotCollinear : Error { using Error::Error; };
struct DegeneratePoints : Error { using Error::Error; };

// convex
struct DimensionMismatch : Error { using Error::Error; };
struct NotProperlyConvex : Error { using Error::Error; };
struct PointNotOnBoundary : Error { using Error::Error; };

// hilbert
struct PointOutsideDomain : Error { using Error::Error; };
struct DegenerateChord : Error { using Error::Error; };
struct LineMissesDomain : Error { using Error::Error; };

// kv
struct OutsideCone : Error { using Error::Error; };
struct DualUnbounded : Error { using Error::Error; };

// suspension
struct NonpositiveParameter : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };
struct NotRadiant : Error { using Error::Error; };

// coxeter
struct InconsistentOrders : Error { using Error::Error; };
struct NonRealizableCartan : Error { using Error::Error; };
struct ExplosionGuard : Error { using Error::Error; };

// invariants
struct InvalidOrder : Error { using Error::Error; };
struct WrongOrders : Error { using Error::Error; };

// devmap
struct ZeroCrossRatio : Error { using Error::Error; };
struct DegeneratePlacement : Error { using Error::Error; };
struct VertexNotFixed : Error { using Error::Error; };

// cli / io
struct SpecParseError : Error { using Error::Error; };
struct UnknownParameter : Error { using Error::Error; };
struct BadChart : Error { using Error::Error; };
struct FileNotFound : Error { using Error::Error; };

// Splitmix64, used to derive independent substream seeds from (seed, index).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Thread cap from PROJCONVEX_THREADS (default: hardware concurrency).
int thread_count();

// Runs fn(chunk_index) for chunk_index in [0, n_chunks). Chunks may run on
// worker threads; chunk indices are stable so seeded work stays deterministic.
void parallel_chunks(long long n_chunks, const std::function<void(long long)>& fn);

}  // namespace projconvex

#endif
