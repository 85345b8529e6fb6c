// Generated by tools/gen_sobol_directions.py. Do not edit by hand.
// Joe-Kuo primitive polynomials and initial direction numbers
// (new-joe-kuo-6 table, via scipy.stats._sobol).

#include "rqmcbet/sobol.hpp"

namespace rqmcbet::detail {

const int kSobolTableDims = 64;

const std::uint32_t kSobolPoly[] = {
    1u, 3u, 7u, 11u, 13u, 19u, 25u, 37u, 41u, 47u, 55u, 59u, 61u, 67u, 91u, 97u,
    103u, 109u, 115u, 131u, 137u, 143u, 145u, 157u, 167u, 171u, 185u, 191u,
    193u, 203u, 211u, 213u, 229u, 239u, 241u, 247u, 253u, 285u, 299u, 301u,
    333u, 351u, 355u, 357u, 361u, 369u, 391u, 397u, 425u, 451u, 463u, 487u,
    501u, 529u, 539u, 545u, 557u, 563u, 601u, 607u, 617u, 623u, 631u, 637u
};

const int kSobolMinitOffset[] = {
    0, 1, 2, 4, 7, 10, 14, 18, 23, 28, 33, 38, 43, 48, 54, 60, 66, 72, 78, 84,
    91, 98, 105, 112, 119, 126, 133, 140, 147, 154, 161, 168, 175, 182, 189,
    196, 203, 210, 218, 226, 234, 242, 250, 258, 266, 274, 282, 290, 298, 306,
    314, 322, 330, 338, 347, 356, 365, 374, 383, 392, 401, 410, 419, 428, 437
};

const std::uint32_t kSobolMinit[] = {
    1u, 1u, 1u, 3u, 1u, 3u, 1u, 1u, 1u, 1u, 1u, 1u, 3u, 3u, 1u, 3u, 5u, 13u, 1u,
    1u, 5u, 5u, 17u, 1u, 1u, 5u, 5u, 5u, 1u, 1u, 7u, 11u, 19u, 1u, 1u, 5u, 1u,
    1u, 1u, 1u, 1u, 3u, 11u, 1u, 3u, 5u, 5u, 31u, 1u, 3u, 3u, 9u, 7u, 49u, 1u,
    1u, 1u, 15u, 21u, 21u, 1u, 3u, 1u, 13u, 27u, 49u, 1u, 1u, 1u, 15u, 7u, 5u,
    1u, 3u, 1u, 15u, 13u, 25u, 1u, 1u, 5u, 5u, 19u, 61u, 1u, 3u, 7u, 11u, 23u,
    15u, 103u, 1u, 3u, 7u, 13u, 13u, 15u, 69u, 1u, 1u, 3u, 13u, 7u, 35u, 63u,
    1u, 3u, 5u, 9u, 1u, 25u, 53u, 1u, 3u, 1u, 13u, 9u, 35u, 107u, 1u, 3u, 1u,
    5u, 27u, 61u, 31u, 1u, 1u, 5u, 11u, 19u, 41u, 61u, 1u, 3u, 5u, 3u, 3u, 13u,
    69u, 1u, 1u, 7u, 13u, 1u, 19u, 1u, 1u, 3u, 7u, 5u, 13u, 19u, 59u, 1u, 1u,
    3u, 9u, 25u, 29u, 41u, 1u, 3u, 5u, 13u, 23u, 1u, 55u, 1u, 3u, 7u, 3u, 13u,
    59u, 17u, 1u, 3u, 1u, 3u, 5u, 53u, 69u, 1u, 1u, 5u, 5u, 23u, 33u, 13u, 1u,
    1u, 7u, 7u, 1u, 61u, 123u, 1u, 1u, 7u, 9u, 13u, 61u, 49u, 1u, 3u, 3u, 5u,
    3u, 55u, 33u, 1u, 3u, 1u, 15u, 31u, 13u, 49u, 245u, 1u, 3u, 5u, 15u, 31u,
    59u, 63u, 97u, 1u, 3u, 1u, 11u, 11u, 11u, 77u, 249u, 1u, 3u, 1u, 11u, 27u,
    43u, 71u, 9u, 1u, 1u, 7u, 15u, 21u, 11u, 81u, 45u, 1u, 3u, 7u, 3u, 25u, 31u,
    65u, 79u, 1u, 3u, 1u, 1u, 19u, 11u, 3u, 205u, 1u, 1u, 5u, 9u, 19u, 21u, 29u,
    157u, 1u, 3u, 7u, 11u, 1u, 33u, 89u, 185u, 1u, 3u, 3u, 3u, 15u, 9u, 79u,
    71u, 1u, 3u, 7u, 11u, 15u, 39u, 119u, 27u, 1u, 1u, 3u, 1u, 11u, 31u, 97u,
    225u, 1u, 1u, 1u, 3u, 23u, 43u, 57u, 177u, 1u, 3u, 7u, 7u, 17u, 17u, 37u,
    71u, 1u, 3u, 1u, 5u, 27u, 63u, 123u, 213u, 1u, 1u, 3u, 5u, 11u, 43u, 53u,
    133u, 1u, 3u, 5u, 5u, 29u, 17u, 47u, 173u, 479u, 1u, 3u, 3u, 11u, 3u, 1u,
    109u, 9u, 69u, 1u, 1u, 1u, 5u, 17u, 39u, 23u, 5u, 343u, 1u, 3u, 1u, 5u, 25u,
    15u, 31u, 103u, 499u, 1u, 1u, 1u, 11u, 11u, 17u, 63u, 105u, 183u, 1u, 1u,
    5u, 11u, 9u, 29u, 97u, 231u, 363u, 1u, 1u, 5u, 15u, 19u, 45u, 41u, 7u, 383u,
    1u, 3u, 7u, 7u, 31u, 19u, 83u, 137u, 221u, 1u, 1u, 1u, 3u, 23u, 15u, 111u,
    223u, 83u, 1u, 1u, 5u, 13u, 31u, 15u, 55u, 25u, 161u, 1u, 1u, 3u, 13u, 25u,
    47u, 39u, 87u, 257u
};

}  // namespace rqmcbet::detail
