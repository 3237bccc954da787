/*
   Copyright 2026 The whf contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "whf/examples.hpp"

namespace whf {

// Transcribed as printed; entry (2,1) at t^-7 lacks its i in print.
const std::vector<ListingEntry>& ex61FactorListing() {
    static const std::vector<ListingEntry> listing = {
        {1, 1, 0, "1", false},
        {1, 1, -1, "-5.003000600", true},
        {1, 1, -2, "-0.1000500140e-1", false},
        {1, 1, -3, "+0.1000000100", true},
        {1, 1, -4, "-0.1000600220e-4", false},
        {1, 1, -5, "+0.9998000600e-3", true},
        {1, 1, -6, "-0.2001300540e-5", false},
        {1, 1, -7, "+0.1999400060e-4", true},
        {1, 1, -8, "-5.003401521e-8", false},
        {1, 1, -9, "+4.998200040e-7", true},
        {1, 1, -10, "-1.400980460e-9", false},
        {1, 1, -11, "+1.399439988e-8", true},
        {1, 1, -12, "-4.203000600e-11", false},
        {1, 1, -13, "+4.198200768e-10", true},
        {1, 1, -14, "-1.320528106e-12", false},
        {1, 1, -15, "+1.320264158e-11", true},
        {1, 2, -1, "+1.000200000", true},
        {1, 2, -2, "+0.2000199880e-2", false},
        {1, 2, -3, "-0.2000400120e-1", true},
        {1, 2, -4, "+0.2000399960e-4", false},
        {1, 2, -5, "-0.2000400160e-3", true},
        {1, 2, -6, "+4.001000040e-7", false},
        {1, 2, -7, "-0.4000800360e-5", true},
        {1, 2, -8, "+1.000280032e-8", false},
        {1, 2, -9, "-1.000200096e-7", true},
        {1, 2, -10, "+2.800840136e-10", false},
        {1, 2, -11, "-2.800560280e-9", true},
        {1, 2, -12, "+8.402638799e-12", false},
        {1, 2, -13, "-8.401680864e-11", true},
        {1, 2, -14, "+2.639999789e-13", false},
        {1, 2, -15, "-2.640528106e-12", true},
        {2, 1, -1, "-25.02500400", true},
        {2, 1, -2, "-0.5001499900e-1", false},
        {2, 1, -3, "+0.4999000500", true},
        {2, 1, -4, "-0.5000999299e-3", false},
        {2, 1, -5, "+0.4997000400e-2", true},
        {2, 1, -6, "-0.1000149790e-4", false},
        {2, 1, -7, "+0.9992000700e-4", false},
        {2, 1, -8, "-2.500299359e-7", false},
        {2, 1, -9, "+0.2497700160e-5", true},
        {2, 1, -10, "-7.000697979e-9", false},
        {2, 1, -11, "+6.993000420e-8", true},
        {2, 1, -12, "-2.100179772e-10", false},
        {2, 1, -13, "+2.097780120e-9", true},
        {2, 1, -14, "-6.602640528e-12", false},
        {2, 1, -15, "+6.601320792e-11", true},
        {2, 2, 0, "1", false},
        {2, 2, -1, "+5.003000600", true},
        {2, 2, -2, "+0.9998998599e-2", false},
        {2, 2, -3, "-0.9999999800e-1", true},
        {2, 2, -4, "+0.9997997799e-4", false},
        {2, 2, -5, "-0.9997998999e-3", true},
        {2, 2, -6, "+0.1999499460e-5", false},
        {2, 2, -7, "-0.1999399700e-4", true},
        {2, 2, -8, "+4.998598479e-8", false},
        {2, 2, -9, "-4.998199079e-7", true},
        {2, 2, -10, "+1.399579540e-9", false},
        {2, 2, -11, "-1.399439708e-8", true},
        {2, 2, -12, "+4.198679400e-11", false},
        {2, 2, -13, "-4.198199904e-10", true},
        {2, 2, -14, "+1.319999894e-12", false},
        {2, 2, -15, "-1.320264053e-11", true},
    };
    return listing;
}

}  // namespace whf
