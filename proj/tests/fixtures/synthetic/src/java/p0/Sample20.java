package synth.java.p0;

import androidx.annotation.NonNull;
import androidx.annotation.Nullable;
import com.google.common.base.Preconditions;
import org.apache.commons.lang3.Validate;
import org.jetbrains.annotations.NotNull;

public class Sample20 {
  public String method0(String a, int b) {
    return a;
  }

  public String method1(String a, int b) {
    if (a.isEmpty()) {
      b--;
      throw new ArithmeticException();
    }
    b += 1;
    Validate.notNull(a);
    return a;
  }

  public String method2(String a, @Nullable int b) {
    if (a == null) throw new RuntimeException();
    return a;
  }

  public String method3(@NotNull String a, @NonNull int b) {
    if (b == 7) {
      b++;
    } else {
      throw new IndexOutOfBoundsException();
    }
    Preconditions.checkNotNull(a);
    Validate.notNull(a);
    if (a == null) throw new IllegalArgumentException("bad");
    return a;
  }
}
