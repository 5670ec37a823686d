#pragma once

// Noun-phrase inputs for the NP golden set, the participle examples and the
// starred (ungrammatical) quantifier examples.

#include <string_view>

namespace np_inputs {

struct Case {
  std::string_view text;
  std::string_view expected;  // utf8 surface, or the violation rule for starred inputs
};

inline constexpr Case kGolden[] = {
    {R"(((referent ((arg ((referent ((arg ((concept "oran")))))
                        (classifier ((referent ((arg ((concept "komisyon")))))))))))
         (classifier ((referent ((arg ((concept "kart")))))
                      (classifier ((referent ((arg ((concept "kredi")))))))))))",
     "kredi kartı komisyon oranı"},
    {R"(((referent ((arg ((concept "masa")))))
         (modifier ((quan-mod ((number ((low 2)))))
                    (qualitative ((p-name "bUyUk")))))))",
     "iki büyük masa"},
    {R"(((referent ((arg ((concept "masa")))))
         (modifier ((quan-mod ((number ((low 2)))))
                    (qualitative ((p-name "bUyUk")))
                    (control ((emphasis quantitative)))))))",
     "büyük iki masa"},
    {R"(((referent ((arg ((concept "kitab"))) (control ((drop +)))))
         (possessor ((referent ((arg ((concept "aySe")))))))))",
     "Ayşe'ninki"},
    {R"(((referent ((arg ((concept "adam"))) (control ((drop +)))))
         (specifier ((set-spec ((referent ((arg ((concept "adam")))
                                           (agr ((number plural) (person 3)))))
                                (modifier ((quan-mod ((number ((low 7)))))))))))
         (modifier ((quan-mod ((number ((low 2)))))))))",
     "yedi adamdan ikisi"},
    {R"(((referent ((arg ((concept "elma"))) (control ((drop +)))))
         (modifier ((quan-mod ((number ((low 2) (high 3) (control ((formal-low +)))))))))))",
     "en az iki üç"},
    {R"(((referent ((arg ((concept "elma")))))
         (modifier ((quan-mod ((measure ((quantity ((low 1) (high 2)))
                                         (unit ((referent ((arg ((concept "kilo") (sem ((measure +)))))))))))))))))",
     "bir iki kilo elma"},
};

inline constexpr Case kParticiples[] = {
    {R"(((referent ((arg ((concept "adam")))))
         (roles ((role agent)
                 (arg ((s-form participle) (verb ((root "gir") (tense past)))
                       (arguments ((subject ((referent ((arg ((concept "adam")))))))
                                   (goal ((referent ((arg ((concept "oda")))))))))))))))",
     "odaya giren adam"},
    {R"(((referent ((arg ((concept "kitab")))))
         (roles ((role theme)
                 (arg ((s-form participle) (verb ((root "ver") (tense past)))
                       (arguments ((subject ((referent ((arg ((concept "o")))))))
                                   (dir-obj ((referent ((arg ((concept "kitab")))))))))))))))",
     "onun verdiği kitap"},
    {R"(((referent ((arg ((concept "iskele")))))
         (roles ((role source)
                 (arg ((s-form participle) (voice passive) (verb ((root "at") (tense present)))
                       (arguments ((subject ((referent ((arg ((concept "taS")))))
                                             (specifier ((quan ((definite -)))))))
                                   (goal ((referent ((arg ((concept "deniz")))))))
                                   (source ((referent ((arg ((concept "iskele")))))))))
                       (control ((is ((focus subject)))))))))))",
     "denize taş atılan iskele"},
};

inline constexpr Case kStarred[] = {
    {R"(((referent ((arg ((concept "insan"))) (agr ((number plural) (person 3)))))
         (specifier ((quan ((quantifier "her")))))))",
     "QUANT-NUMBER"},
    {R"(((referent ((arg ((concept "masa")))))
         (specifier ((quan ((quantifier "bazI")))))))",
     "QUANT-NUMBER"},
    {R"(((referent ((arg ((concept "masa"))) (agr ((number plural) (person 3)))))
         (specifier ((quan ((quantifier "bazI")))))
         (modifier ((quan-mod ((number ((low 2)))))))))",
     "QUANT-CARD"},
    {R"(((referent ((arg ((concept "kitab"))) (agr ((number plural) (person 3)))))
         (specifier ((dem ((demons "bu"))) (quan ((quantifier "bazI")))))))",
     "QUANT-DEM"},
    {R"(((referent ((arg ((concept "OGrenci")))))
         (specifier ((dem ((demons "Su"))) (quan ((quantifier "birkaC")))
                     (control ((dem-order quant-before-dem)))))))",
     "QUANT-DEM-ORDER"},
};

// Grammatical counterparts of the starred inputs.
inline constexpr Case kStarredControls[] = {
    {R"(((referent ((arg ((concept "insan")))))
         (specifier ((quan ((quantifier "her")))))))",
     "her insan"},
    {R"(((referent ((arg ((concept "masa"))) (agr ((number plural) (person 3)))))
         (specifier ((quan ((quantifier "bazI")))))))",
     "bazı masalar"},
    {R"(((referent ((arg ((concept "OGrenci")))))
         (specifier ((dem ((demons "Su"))) (quan ((quantifier "birkaC")))))))",
     "şu birkaç öğrenci"},
};

}  // namespace np_inputs
