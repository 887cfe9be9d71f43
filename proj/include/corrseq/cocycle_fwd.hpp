#pragma once

namespace corrseq {
class StepCocycle;
}
