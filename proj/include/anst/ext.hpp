#pragma once

#include <optional>
#include <string>

#include "anst/cosets.hpp"

namespace anst {

enum class Flavor { Smooth, Analytic };

// A representation named by the dimension tables.
struct RepDescriptor {
    enum class Kind {
        IndFull,        // i or I from the parabolic of I
        GenSteinberg,   // v_I
        StAn,           // the locally analytic Steinberg
        SigmaI,         // Sigma_i
        SigmaISigma,    // Sigma_{i,sigma}
        ConstituentC,   // C_{j,sigma}
        SelfExtLevi,    // pi_I against itself at the Levi level
    };

    Kind kind = Kind::StAn;
    BlockSet set;      // IndFull, GenSteinberg, SelfExtLevi
    int index = 0;     // SigmaI, SigmaISigma, ConstituentC
    int sigma = 0;     // SigmaISigma, ConstituentC

    // Grammar: i:1,3 | v:1,3 | levi:1,3 | st-an | sigma:2 | sigma:2@0 | c:2@0; "-" is the empty set.
    static RepDescriptor parse(const std::string& text, int r, int k);
    std::string str() const;
};

struct ExtQuery {
    Flavor flavor = Flavor::Smooth;
    bool fixed_center = false;
    int degree = 0;
    RepDescriptor left;
    RepDescriptor right;
    int n = 1;
    int r = 1;
    int k = 1;
    int d_L = 1;
};

struct ExtAnswer {
    enum class Status { Dimension, ZeroByRule, NotDetermined };

    Status status = Status::NotDetermined;
    long long value = 0;
    std::string rule;
    std::string citation;

    long long dim() const { return status == Status::Dimension ? value : 0; }
    bool determined() const { return status != Status::NotDetermined; }
};

enum class CharGroup { HomL, HomLsmooth, HomLsigma, HomZI, HomZIbar, XstarLI, XstarLIbar };

CharGroup parse_char_group(const std::string& s);
long long char_group_dim(CharGroup kind, const BlockSet& I, int d_L);

// Number of Levi blocks of L_I^<r>.
int levi_block_count(const BlockSet& I);

long long binomial(long long n, long long k);

ExtAnswer ext_dim(const ExtQuery& q);

bool consistency_check_thm_main(int r, int k, int d_L);

} // namespace anst
