"""Nested Gaussian-weight quadrature tables (generated, do not edit).

Produced by tools/generate_kpn_tables.py at 120-digit working precision.
Weights are normalized to the standard normal density (they sum to 1)."""

# order -> (degree of exactness, nodes, weights); decimal strings
TABLES = {
    1: (
        1,
        (
            "0.0",
        ),
        (
            "1.0",
        ),
    ),
    3: (
        5,
        (
            "-1.732050807568877293527446341505872",
            "0.0",
            "1.732050807568877293527446341505872",
        ),
        (
            "1.666666666666666666666666666666667e-1",
            "6.666666666666666666666666666666667e-1",
            "1.666666666666666666666666666666667e-1",
        ),
    ),
    7: (
        7,
        (
            "-2.861279576057058117331474486594368",
            "-1.732050807568877293527446341505872",
            "-7.410953499945408418617965611069559e-1",
            "0.0",
            "7.410953499945408418617965611069559e-1",
            "1.732050807568877293527446341505872",
            "2.861279576057058117331474486594368",
        ),
        (
            "9.249718950580612516282173732504637e-3",
            "8.800077577314248896537739902569541e-2",
            "2.918143544172954481804086161911231e-1",
            "2.218703017179629006758636221013537e-1",
            "2.918143544172954481804086161911231e-1",
            "8.800077577314248896537739902569541e-2",
            "9.249718950580612516282173732504637e-3",
        ),
    ),
    9: (
        15,
        (
            "-4.184956017672731860688907895322002",
            "-2.861279576057058117331474486594368",
            "-1.732050807568877293527446341505872",
            "-7.410953499945408418617965611069559e-1",
            "0.0",
            "7.410953499945408418617965611069559e-1",
            "1.732050807568877293527446341505872",
            "2.861279576057058117331474486594368",
            "4.184956017672731860688907895322002",
        ),
        (
            "9.426945755651748944507793982471504e-5",
            "7.996325470893532769855265666485316e-3",
            "9.485094850948509485094850948509485e-2",
            "2.700743295779378707627670199244681e-1",
            "2.53968253968253968253968253968254e-1",
            "2.700743295779378707627670199244681e-1",
            "9.485094850948509485094850948509485e-2",
            "7.996325470893532769855265666485316e-3",
            "9.426945755651748944507793982471504e-5",
        ),
    ),
    17: (
        17,
        (
            "-6.363394494336369987632578605063408",
            "-5.187016039913656065991776521815726",
            "-4.184956017672731860688907895322002",
            "-2.861279576057058117331474486594368",
            "-2.596083115049202159357846029553136",
            "-1.732050807568877293527446341505872",
            "-1.230423634027306007751143650033677",
            "-7.410953499945408418617965611069559e-1",
            "0.0",
            "7.410953499945408418617965611069559e-1",
            "1.230423634027306007751143650033677",
            "1.732050807568877293527446341505872",
            "2.596083115049202159357846029553136",
            "2.861279576057058117331474486594368",
            "4.184956017672731860688907895322002",
            "5.187016039913656065991776521815726",
            "6.363394494336369987632578605063408",
        ),
        (
            "2.113649950542423628080352713176103e-8",
            "-8.20492075415091722665560544321847e-7",
            "1.056378361541695533627301896915432e-4",
            "7.033480237827910432180782672226978e-3",
            "1.965677093877749070255717729885487e-3",
            "8.868100215202804480052821286303847e-2",
            "1.419265482644935990226056322136756e-2",
            "2.545612320417122779523270217126272e-1",
            "2.669222303350527959131427127363598e-1",
            "2.545612320417122779523270217126272e-1",
            "1.419265482644935990226056322136756e-2",
            "8.868100215202804480052821286303847e-2",
            "1.965677093877749070255717729885487e-3",
            "7.033480237827910432180782672226978e-3",
            "1.056378361541695533627301896915432e-4",
            "-8.20492075415091722665560544321847e-7",
            "2.113649950542423628080352713176103e-8",
        ),
    ),
    19: (
        29,
        (
            "-6.363394494336369987632578605063408",
            "-5.187016039913656065991776521815726",
            "-4.184956017672731860688907895322002",
            "-3.205333794499194518718378176305637",
            "-2.861279576057058117331474486594368",
            "-2.596083115049202159357846029553136",
            "-1.732050807568877293527446341505872",
            "-1.230423634027306007751143650033677",
            "-7.410953499945408418617965611069559e-1",
            "0.0",
            "7.410953499945408418617965611069559e-1",
            "1.230423634027306007751143650033677",
            "1.732050807568877293527446341505872",
            "2.596083115049202159357846029553136",
            "2.861279576057058117331474486594368",
            "3.205333794499194518718378176305637",
            "4.184956017672731860688907895322002",
            "5.187016039913656065991776521815726",
            "6.363394494336369987632578605063408",
        ),
        (
            "8.629684602229885768008061790270569e-10",
            "6.094808731468983460398371916705614e-7",
            "6.012336945984781849906133942350163e-5",
            "2.884880436506751291222029866465563e-3",
            "-6.33722479337373585413936047407051e-3",
            "1.808523425479845277249607241222893e-2",
            "6.409605468680758871147002765047213e-2",
            "6.115173012524767711418338373802312e-2",
            "2.083249916496088778093513378909852e-1",
            "3.034671998542058664311656618769483e-1",
            "2.083249916496088778093513378909852e-1",
            "6.115173012524767711418338373802312e-2",
            "6.409605468680758871147002765047213e-2",
            "1.808523425479845277249607241222893e-2",
            "-6.33722479337373585413936047407051e-3",
            "2.884880436506751291222029866465563e-3",
            "6.012336945984781849906133942350163e-5",
            "6.094808731468983460398371916705614e-7",
            "8.629684602229885768008061790270569e-10",
        ),
    ),
    31: (
        31,
        (
            "-7.980771798590560880180006476785043",
            "-6.363394494336369987632578605063408",
            "-5.698177768488109589329649602133025",
            "-5.187016039913656065991776521815726",
            "-4.736433085952297084098720196871524",
            "-4.184956017672731860688907895322002",
            "-3.635318519037278245218972028619775",
            "-3.205333794499194518718378176305637",
            "-2.861279576057058117331474486594368",
            "-2.596083115049202159357846029553136",
            "-2.233626061676941652009594313381299",
            "-1.732050807568877293527446341505872",
            "-1.230423634027306007751143650033677",
            "-7.410953499945408418617965611069559e-1",
            "-2.48992297579960611806557803951626e-1",
            "0.0",
            "2.48992297579960611806557803951626e-1",
            "7.410953499945408418617965611069559e-1",
            "1.230423634027306007751143650033677",
            "1.732050807568877293527446341505872",
            "2.233626061676941652009594313381299",
            "2.596083115049202159357846029553136",
            "2.861279576057058117331474486594368",
            "3.205333794499194518718378176305637",
            "3.635318519037278245218972028619775",
            "4.184956017672731860688907895322002",
            "4.736433085952297084098720196871524",
            "5.187016039913656065991776521815726",
            "5.698177768488109589329649602133025",
            "6.363394494336369987632578605063408",
            "7.980771798590560880180006476785043",
        ),
        (
            "2.631256846213246054712451781591698e-14",
            "6.61277844192769218482262674714387e-10",
            "1.372765564822106086110236211056884e-8",
            "3.554429778769028026691419298987872e-7",
            "2.010349861249455734708683039327771e-6",
            "4.145402063950397492993260227847391e-5",
            "2.16481873742324385074504879025362e-4",
            "1.23433003440123164731051019205845e-3",
            "6.414357979060868148369415836562331e-4",
            "5.960994581707686056252757357488851e-3",
            "1.282055706083407377327373697581376e-2",
            "4.858186060915387681772787128934022e-2",
            "8.701632877884953738256098424483591e-2",
            "1.582301407676247339205405864523377e-1",
            "1.596873050729016744970268513433628e-1",
            "5.113346244088067877927146641932216e-2",
            "1.596873050729016744970268513433628e-1",
            "1.582301407676247339205405864523377e-1",
            "8.701632877884953738256098424483591e-2",
            "4.858186060915387681772787128934022e-2",
            "1.282055706083407377327373697581376e-2",
            "5.960994581707686056252757357488851e-3",
            "6.414357979060868148369415836562331e-4",
            "1.23433003440123164731051019205845e-3",
            "2.16481873742324385074504879025362e-4",
            "4.145402063950397492993260227847391e-5",
            "2.010349861249455734708683039327771e-6",
            "3.554429778769028026691419298987872e-7",
            "1.372765564822106086110236211056884e-8",
            "6.61277844192769218482262674714387e-10",
            "2.631256846213246054712451781591698e-14",
        ),
    ),
    33: (
        33,
        (
            "-7.980771798590560880180006476785043",
            "-7.122106700804616658218976915658153",
            "-6.363394494336369987632578605063408",
            "-5.698177768488109589329649602133025",
            "-5.187016039913656065991776521815726",
            "-4.736433085952297084098720196871524",
            "-4.184956017672731860688907895322002",
            "-3.635318519037278245218972028619775",
            "-3.205333794499194518718378176305637",
            "-2.861279576057058117331474486594368",
            "-2.596083115049202159357846029553136",
            "-2.233626061676941652009594313381299",
            "-1.732050807568877293527446341505872",
            "-1.230423634027306007751143650033677",
            "-7.410953499945408418617965611069559e-1",
            "-2.48992297579960611806557803951626e-1",
            "0.0",
            "2.48992297579960611806557803951626e-1",
            "7.410953499945408418617965611069559e-1",
            "1.230423634027306007751143650033677",
            "1.732050807568877293527446341505872",
            "2.233626061676941652009594313381299",
            "2.596083115049202159357846029553136",
            "2.861279576057058117331474486594368",
            "3.205333794499194518718378176305637",
            "3.635318519037278245218972028619775",
            "4.184956017672731860688907895322002",
            "4.736433085952297084098720196871524",
            "5.187016039913656065991776521815726",
            "5.698177768488109589329649602133025",
            "6.363394494336369987632578605063408",
            "7.122106700804616658218976915658153",
            "7.980771798590560880180006476785043",
        ),
        (
            "5.726730389087163203613125858646846e-15",
            "3.073431023153131788183033332863741e-12",
            "4.612776683202253495817966048220608e-10",
            "2.135721135797998100327684239378679e-8",
            "2.472350863167948121221759584734497e-7",
            "2.731321614701955879057057988256207e-6",
            "3.575051349690311401353212997388154e-5",
            "2.750385591247450295207471601626427e-4",
            "8.203336525416575979587848315822873e-4",
            "2.305956251073656840114833222209838e-3",
            "3.1643249220601039044534603128491e-3",
            "1.566465165276753842953013241682163e-2",
            "4.528365629028033888872442412981232e-2",
            "9.234890600624479799892265438694e-2",
            "1.481005247277202284687981288483811e-1",
            "1.916669342084950695462160255665838e-1",
            "6.618456758515147546150519014219875e-4",
            "1.916669342084950695462160255665838e-1",
            "1.481005247277202284687981288483811e-1",
            "9.234890600624479799892265438694e-2",
            "4.528365629028033888872442412981232e-2",
            "1.566465165276753842953013241682163e-2",
            "3.1643249220601039044534603128491e-3",
            "2.305956251073656840114833222209838e-3",
            "8.203336525416575979587848315822873e-4",
            "2.750385591247450295207471601626427e-4",
            "3.575051349690311401353212997388154e-5",
            "2.731321614701955879057057988256207e-6",
            "2.472350863167948121221759584734497e-7",
            "2.135721135797998100327684239378679e-8",
            "4.612776683202253495817966048220608e-10",
            "3.073431023153131788183033332863741e-12",
            "5.726730389087163203613125858646846e-15",
        ),
    ),
    35: (
        51,
        (
            "-9.016939789890302517459803721310537",
            "-7.980771798590560880180006476785043",
            "-7.122106700804616658218976915658153",
            "-6.363394494336369987632578605063408",
            "-5.698177768488109589329649602133025",
            "-5.187016039913656065991776521815726",
            "-4.736433085952297084098720196871524",
            "-4.184956017672731860688907895322002",
            "-3.635318519037278245218972028619775",
            "-3.205333794499194518718378176305637",
            "-2.861279576057058117331474486594368",
            "-2.596083115049202159357846029553136",
            "-2.233626061676941652009594313381299",
            "-1.732050807568877293527446341505872",
            "-1.230423634027306007751143650033677",
            "-7.410953499945408418617965611069559e-1",
            "-2.48992297579960611806557803951626e-1",
            "0.0",
            "2.48992297579960611806557803951626e-1",
            "7.410953499945408418617965611069559e-1",
            "1.230423634027306007751143650033677",
            "1.732050807568877293527446341505872",
            "2.233626061676941652009594313381299",
            "2.596083115049202159357846029553136",
            "2.861279576057058117331474486594368",
            "3.205333794499194518718378176305637",
            "3.635318519037278245218972028619775",
            "4.184956017672731860688907895322002",
            "4.736433085952297084098720196871524",
            "5.187016039913656065991776521815726",
            "5.698177768488109589329649602133025",
            "6.363394494336369987632578605063408",
            "7.122106700804616658218976915658153",
            "7.980771798590560880180006476785043",
            "9.016939789890302517459803721310537",
        ),
        (
            "1.054132658233334118940045794014051e-18",
            "5.45004126506368991707589692041379e-15",
            "3.097222357606316171279446417015748e-12",
            "4.601176034865618701082640943132496e-10",
            "2.139419447956110630667387605957565e-8",
            "2.467642134579807867116043238327936e-7",
            "2.734220680118782981670690876575338e-6",
            "3.572934819897510022818420124775338e-5",
            "2.752421411678515749951638197248913e-4",
            "8.189539275022649090616771578302792e-4",
            "2.311345240352210120723419957939824e-3",
            "3.155446269187563805096278325164826e-3",
            "1.567347375185115154155795765726933e-2",
            "4.527368546515051586473786580233143e-2",
            "9.23647267169863059276383613338036e-2",
            "1.480708311552160061537056133031082e-1",
            "1.917601158880444295909162391857538e-1",
            "5.148945080687842937972841679096422e-4",
            "1.917601158880444295909162391857538e-1",
            "1.480708311552160061537056133031082e-1",
            "9.23647267169863059276383613338036e-2",
            "4.527368546515051586473786580233143e-2",
            "1.567347375185115154155795765726933e-2",
            "3.155446269187563805096278325164826e-3",
            "2.311345240352210120723419957939824e-3",
            "8.189539275022649090616771578302792e-4",
            "2.752421411678515749951638197248913e-4",
            "3.572934819897510022818420124775338e-5",
            "2.734220680118782981670690876575338e-6",
            "2.467642134579807867116043238327936e-7",
            "2.139419447956110630667387605957565e-8",
            "4.601176034865618701082640943132496e-10",
            "3.097222357606316171279446417015748e-12",
            "5.45004126506368991707589692041379e-15",
            "1.054132658233334118940045794014051e-18",
        ),
    ),
}
