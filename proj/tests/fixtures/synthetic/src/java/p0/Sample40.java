package synth.java.p0;

import androidx.annotation.NonNull;
import javax.annotation.Nonnull;
import org.jetbrains.annotations.NotNull;

public class Sample40 {
  @NonNull
  public String method0(String a, int b) {
    assert b == 7 : "invariant";
    if (b < 0) throw new RuntimeException();
    return a;
  }

  @SuppressWarnings("unused")
  public String method1(String a, int b) {
    assert b < 0 : "invariant";
    b += 1;
    return a;
  }

  @Nonnull
  public String method2(String a, @NotNull int b) {
    if (b % 2 != 0) {
      b++;
    } else {
      throw new ClassCastException();
    }
    if (b < 0) throw new Exception();
    if (a == null) {
      b++;
    } else {
      throw new ClassCastException();
    }
    return a;
  }
}
