#ifndef TWISTH_CATALOG_DATA_HPP_
#define TWISTH_CATALOG_DATA_HPP_

// Shipped data files, embedded verbatim at configure time.
namespace twisth::detail {

extern const char* const kN32Pres;
extern const char* const kN32Rep;
extern const char* const kN3p2Pres;
extern const char* const kN3p2Rep;
extern const char* const kSzepPres;
extern const char* const kDictionaryMap;

}  // namespace twisth::detail

#endif  // TWISTH_CATALOG_DATA_HPP_
