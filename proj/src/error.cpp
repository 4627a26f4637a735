#include "skewlines/error.hpp"

namespace skewlines {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::CoplanarPair: return "CoplanarPair";
    case ErrorKind::ParallelVectors: return "ParallelVectors";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::BadMultiIndex: return "BadMultiIndex";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace skewlines
